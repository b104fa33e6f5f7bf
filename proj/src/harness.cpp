#include "polyseq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "polyseq/config.hpp"

namespace polyseq {

const char* family_name(Family f) {
    switch (f) {
        case Family::frank: return "frank";
        case Family::chu: return "chu";
        case Family::milewski: return "milewski";
        case Family::lm: return "lm";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "frank") return Family::frank;
    if (name == "chu") return Family::chu;
    if (name == "milewski") return Family::milewski;
    if (name == "lm") return Family::lm;
    raise(errc::invalid_argument, "unknown family '" + name + "'");
}

namespace {

struct Instance {
    Family family = Family::chu;
    long long L = 0, M = 0, A = 0, N = 0;
    long long G = 0, H = 0;  // milewski only
    std::string error;       // set when expansion already failed
};

long long pow_ll(long long g, long long e) {
    long long v = 1;
    for (long long i = 0; i < e; ++i) v *= g;
    return v;
}

// N = G^(2H+1) with the largest odd exponent (smallest G), or H = 0 if the
// size is not representable.
bool milewski_shape(long long n, long long& G, long long& H) {
    for (long long exp = 61; exp >= 3; exp -= 2) {
        const long long g = static_cast<long long>(
            std::llround(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(exp))));
        for (long long cand = std::max<long long>(2, g - 1); cand <= g + 1; ++cand) {
            __int128 v = 1;
            bool over = false;
            for (long long i = 0; i < exp && !over; ++i) {
                v *= cand;
                if (v > n) over = true;
            }
            if (!over && v == n) {
                G = cand;
                H = (exp - 1) / 2;
                return true;
            }
        }
    }
    return false;
}

std::vector<Instance> expand_instances(const SweepSpec& spec) {
    std::vector<Instance> out;
    for (long long size : spec.sizes) {
        switch (spec.family) {
            case Family::frank: {
                Instance it;
                it.family = Family::frank;
                it.L = size;
                it.M = size;
                const __int128 n = static_cast<__int128>(size) * size;
                if (size < 2 || n > (static_cast<__int128>(1) << 61)) {
                    it.N = size;
                    it.error = "frank size must be an M >= 2 within range";
                } else {
                    it.N = size * size;
                }
                out.push_back(it);
                break;
            }
            case Family::chu: {
                Instance it;
                it.family = Family::chu;
                it.L = 1;
                it.M = size;
                it.N = size;
                out.push_back(it);
                break;
            }
            case Family::milewski: {
                Instance it;
                it.family = Family::milewski;
                it.N = size;
                if (!milewski_shape(size, it.G, it.H)) {
                    it.error = "size " + std::to_string(size) +
                               " is not of the form G^(2H+1) with G >= 2, H >= 1";
                } else {
                    it.L = pow_ll(it.G, it.H);
                    it.M = it.L * it.G;
                }
                out.push_back(it);
                break;
            }
            case Family::lm: {
                bool any = false;
                for (long long L = 1; L <= size; ++L) {
                    if (size % L != 0) continue;
                    const long long M = size / L;
                    if (M < 2 || M % L != 0) continue;
                    Instance it;
                    it.family = Family::lm;
                    it.L = L;
                    it.M = M;
                    it.N = size;
                    out.push_back(it);
                    any = true;
                }
                if (!any) {
                    Instance it;
                    it.family = Family::lm;
                    it.N = size;
                    it.error = "no (L, M) with L | M and L*M = " + std::to_string(size);
                    out.push_back(it);
                }
                break;
            }
        }
    }
    return out;
}

SweepRecord run_instance(const Instance& inst, const SweepSpec& spec) {
    SweepRecord rec;
    rec.family = family_name(inst.family);
    rec.L = inst.L;
    rec.M = inst.M;
    rec.A = inst.A;
    rec.N = inst.N;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rec.psl = rec.psl_over_sqrtN = rec.energy = rec.energy_over_N32 = rec.merit_factor = nan;
    if (!inst.error.empty()) {
        rec.error = inst.error;
        return rec;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        SeqParams params;
        PhaseSeq seq;
        switch (inst.family) {
            case Family::frank:
                params = special_case_params(SpecialCase::i, inst.M, inst.M);
                seq = frank_sequence(inst.M);
                break;
            case Family::chu:
                params = special_case_params(SpecialCase::ii, 1, inst.M);
                seq = chu_sequence(inst.M);
                break;
            case Family::milewski:
                params = special_case_params(SpecialCase::ii, inst.L, inst.M);
                seq = milewski_sequence(inst.G, inst.H);
                break;
            case Family::lm:
                params = special_case_params(SpecialCase::ii, inst.L, inst.M);
                seq = lm_sequence(params);
                break;
        }
        rec.A = params.A;
        rec.N = static_cast<long long>(seq.size());

        const CorrProfile alpha =
            seq.size() <= 1024 ? acyclic_autocorr(seq, false) : acyclic_autocorr_fast(seq);
        rec.psl = psl(alpha);
        rec.energy = energy(alpha);
        rec.merit_factor = merit_factor(alpha);
        const double n = static_cast<double>(rec.N);
        rec.psl_over_sqrtN = rec.psl / std::sqrt(n);
        rec.energy_over_N32 = rec.energy / (n * std::sqrt(n));

        const bool exact_ok = rec.N <= spec.exact_verify_max &&
                              seq.D <= max_cyclotomic_order();
        rec.perfect = verify_perfect(seq,
                                     exact_ok ? VerifyMethod::exact_cyclotomic
                                              : VerifyMethod::float_threshold,
                                     params)
                          .perfect();
    } catch (const SeqError& e) {
        rec.error = e.what();
        rec.perfect = false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

} // namespace

std::vector<SweepRecord> sweep(const SweepSpec& spec) {
    const std::vector<Instance> instances = expand_instances(spec);
    std::vector<SweepRecord> records(instances.size());

    unsigned workers = spec.workers > 0 ? static_cast<unsigned>(spec.workers)
                                        : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, instances.size()));

    if (workers <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            records[i] = run_instance(instances[i], spec);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto drain = [&] {
            for (std::size_t i = next.fetch_add(1); i < instances.size();
                 i = next.fetch_add(1)) {
                records[i] = run_instance(instances[i], spec);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    std::sort(records.begin(), records.end(),
              [](const SweepRecord& a, const SweepRecord& b) {
                  return std::tie(a.family, a.N, a.L, a.A) <
                         std::tie(b.family, b.N, b.L, b.A);
              });
    return records;
}

AsymptoticTable asymptotic_table(Family family, const std::vector<long long>& sizes) {
    if (family != Family::frank && family != Family::chu) {
        raise(errc::invalid_argument, "asymptotic table covers frank and chu only");
    }
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        raise(errc::invalid_argument, "sizes must be ascending");
    }
    AsymptoticTable table;
    table.family = family;
    table.ref_inv_pi = 1.0 / std::numbers::pi;
    table.ref_two_over_pi2 = 2.0 / (std::numbers::pi * std::numbers::pi);

    for (long long n : sizes) {
        PhaseSeq seq;
        if (family == Family::frank) {
            const long long m = static_cast<long long>(std::llround(std::sqrt(
                static_cast<double>(n))));
            if (m < 2 || m * m != n) {
                raise(errc::invalid_argument,
                      "frank size " + std::to_string(n) + " is not a perfect square");
            }
            seq = frank_sequence(m);
        } else {
            seq = chu_sequence(n);
        }
        const CorrProfile alpha = acyclic_autocorr_fast(seq);
        AsymptoticRow row;
        row.N = n;
        row.psl = psl(alpha);
        row.energy = energy(alpha);
        const double nd = static_cast<double>(n);
        row.psl_over_sqrtN = row.psl / std::sqrt(nd);
        row.energy_over_N32 = row.energy / (nd * std::sqrt(nd));
        table.rows.push_back(row);
    }
    return table;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

void export_records(const std::vector<SweepRecord>& records, ExportFormat format,
                    std::ostream& out) {
    if (records.empty()) {
        raise(errc::invalid_argument, "no records to export");
    }
    if (format == ExportFormat::csv) {
        out << "family,L,M,A,N,psl,psl_over_sqrtN,energy,energy_over_N32,"
               "merit_factor,perfect,elapsed_ms,error\n";
        for (const auto& r : records) {
            out << r.family << ',' << r.L << ',' << r.M << ',' << r.A << ',' << r.N << ','
                << format_double(r.psl) << ',' << format_double(r.psl_over_sqrtN) << ','
                << format_double(r.energy) << ',' << format_double(r.energy_over_N32)
                << ',' << format_double(r.merit_factor) << ','
                << (r.perfect ? "true" : "false") << ',' << format_double(r.elapsed_ms)
                << ',' << csv_field(r.error) << '\n';
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records) {
            nlohmann::json j;
            j["family"] = r.family;
            j["L"] = r.L;
            j["M"] = r.M;
            j["A"] = r.A;
            j["N"] = r.N;
            j["psl"] = r.psl;
            j["psl_over_sqrtN"] = r.psl_over_sqrtN;
            j["energy"] = r.energy;
            j["energy_over_N32"] = r.energy_over_N32;
            j["merit_factor"] = r.merit_factor;
            j["perfect"] = r.perfect;
            j["elapsed_ms"] = r.elapsed_ms;
            j["error"] = r.error;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
    }
    if (!out) raise(errc::io_error, "write failed");
}

void export_records_to_file(const std::vector<SweepRecord>& records, ExportFormat format,
                            const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(errc::io_error, "cannot open '" + path + "' for writing");
    try {
        export_records(records, format, out);
    } catch (const SeqError& e) {
        if (e.code() == errc::io_error) {
            raise(errc::io_error, "while writing '" + path + "': " + e.what());
        }
        throw;
    }
    out.close();
    if (!out) raise(errc::io_error, "while closing '" + path + "'");
}

std::string format_asymptotic_table(const AsymptoticTable& table) {
    std::ostringstream os;
    os << "family=" << family_name(table.family)
       << "  references: 1/pi=" << format_double(table.ref_inv_pi)
       << "  2/pi^2=" << format_double(table.ref_two_over_pi2) << '\n';
    os << "N,psl,psl_over_sqrtN,energy,energy_over_N32\n";
    for (const auto& row : table.rows) {
        os << row.N << ',' << format_double(row.psl) << ','
           << format_double(row.psl_over_sqrtN) << ',' << format_double(row.energy) << ','
           << format_double(row.energy_over_N32) << '\n';
    }
    return os.str();
}

} // namespace polyseq
