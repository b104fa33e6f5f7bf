#include "polyseq/config.hpp"

#include <atomic>
#include <cstdlib>

#include "polyseq/errors.hpp"

namespace polyseq {

namespace {

long long length_cap_from_env() {
    if (const char* env = std::getenv("POLYSEQ_MAX_N")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return kDefaultMaxSequenceLength;
}

std::atomic<long long>& length_cap() {
    static std::atomic<long long> cap{length_cap_from_env()};
    return cap;
}

std::atomic<long long>& cyclotomic_cap() {
    static std::atomic<long long> cap{kDefaultMaxCyclotomicOrder};
    return cap;
}

} // namespace

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_positive: return "NonPositive";
        case errc::divisibility: return "Divisibility";
        case errc::parity: return "Parity";
        case errc::out_of_range: return "OutOfRange";
        case errc::multiple_of_d: return "MultipleOfD";
        case errc::too_short: return "TooShort";
        case errc::length_cap: return "LengthCap";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::order_cap: return "OrderCap";
        case errc::overflow: return "Overflow";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

long long max_sequence_length() { return length_cap().load(); }

void set_max_sequence_length(long long n) {
    if (n < 1) raise(errc::invalid_argument, "length cap must be positive");
    length_cap().store(n);
}

long long max_cyclotomic_order() { return cyclotomic_cap().load(); }

void set_max_cyclotomic_order(long long n) {
    if (n < 1) raise(errc::invalid_argument, "cyclotomic cap must be positive");
    cyclotomic_cap().store(n);
}

} // namespace polyseq
