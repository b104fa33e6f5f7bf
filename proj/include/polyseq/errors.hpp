// Error surface shared by all polyseq modules.

#pragma once

#include <stdexcept>
#include <string>

namespace polyseq {

enum class errc {
    non_positive,    // L < 1 or M < 2 (or another parameter below its minimum)
    divisibility,    // L does not divide M
    parity,          // A and L*M disagree mod 2
    out_of_range,    // shift or index outside its domain
    multiple_of_d,   // cosecant pole: D divides k
    too_short,       // metric needs at least one nontrivial shift
    length_cap,      // sequence length above the configured maximum
    order_mismatch,  // root sums over different root orders combined
    order_cap,       // cyclotomic order above the configured maximum
    overflow,        // integer overflow in exact arithmetic
    invalid_argument,
    io_error,
};

const char* errc_name(errc c);

class SeqError : public std::runtime_error {
public:
    SeqError(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw SeqError(code, std::string(errc_name(code)) + ": " + what);
}

} // namespace polyseq
