// polyseq CLI: generate sequences, analyze autocorrelation metrics, run the
// verification batteries, sweep families, and print asymptotic-ratio tables.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyseq/config.hpp"
#include "polyseq/harness.hpp"

namespace {

using namespace polyseq;

struct SequenceSelection {
    std::string special;  // empty = explicit (L, M, A)
    long long L = 0, M = 0, A = 0, G = 0, H = 0;
    bool has_L = false, has_M = false, has_A = false;
};

struct Selected {
    PhaseSeq seq;
    std::optional<SeqParams> params;
    std::string family;
};

Selected build_sequence(const SequenceSelection& sel) {
    Selected out;
    if (sel.special.empty()) {
        if (!sel.has_L || !sel.has_M || !sel.has_A) {
            raise(errc::invalid_argument, "need --L, --M and --A (or --special)");
        }
        out.params = validate_params(sel.L, sel.M, sel.A);
        out.seq = lm_sequence(*out.params);
        out.family = "lm";
    } else if (sel.special == "frank") {
        if (!sel.has_M) raise(errc::invalid_argument, "--special frank needs --M");
        out.params = special_case_params(SpecialCase::i, sel.M, sel.M);
        out.seq = frank_sequence(sel.M);
        out.family = "frank";
    } else if (sel.special == "chu") {
        if (!sel.has_M) raise(errc::invalid_argument, "--special chu needs --M");
        out.params = special_case_params(SpecialCase::ii, 1, sel.M);
        out.seq = chu_sequence(sel.M);
        out.family = "chu";
    } else if (sel.special == "milewski") {
        if (sel.G < 2 || sel.H < 1) {
            raise(errc::invalid_argument, "--special milewski needs --G >= 2 and --H >= 1");
        }
        long long L = 1;
        for (long long i = 0; i < sel.H; ++i) {
            L *= sel.G;
            if (L > max_sequence_length()) {
                raise(errc::length_cap, "milewski block length above the sequence cap");
            }
        }
        out.params = special_case_params(SpecialCase::ii, L, L * sel.G);
        out.seq = milewski_sequence(sel.G, sel.H);
        out.family = "milewski";
    } else {
        raise(errc::invalid_argument, "unknown --special '" + sel.special + "'");
    }
    return out;
}

int cmd_gen(const SequenceSelection& sel, const std::string& format) {
    const Selected s = build_sequence(sel);
    const SeqParams& p = *s.params;
    if (format == "csv") {
        std::cout << "L,M,A,N,D,exponents\n"
                  << p.L << ',' << p.M << ',' << p.A << ',' << s.seq.size() << ','
                  << s.seq.D << ",\"";
        for (std::size_t j = 0; j < s.seq.exps.size(); ++j) {
            if (j) std::cout << ' ';
            std::cout << s.seq.exps[j];
        }
        std::cout << "\"\n";
    } else {
        nlohmann::json j;
        j["family"] = s.family;
        j["L"] = p.L;
        j["M"] = p.M;
        j["A"] = p.A;
        j["N"] = s.seq.size();
        j["D"] = s.seq.D;
        j["exponents"] = s.seq.exps;
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_analyze(const SequenceSelection& sel, bool force_exact, bool force_fast,
                const std::string& format) {
    const Selected s = build_sequence(sel);
    const long long n = static_cast<long long>(s.seq.size());
    VerifyMethod method = (n <= 512 && s.seq.D <= max_cyclotomic_order())
                              ? VerifyMethod::exact_cyclotomic
                              : VerifyMethod::float_threshold;
    if (force_exact) method = VerifyMethod::exact_cyclotomic;
    if (force_fast) method = VerifyMethod::float_threshold;

    const MetricsReport report = analyze_sequence(s.seq, s.params, method);
    const char* method_name =
        report.method == VerifyMethod::exact_cyclotomic ? "exact_cyclotomic" : "float_threshold";

    std::size_t bounds_ok = 0;
    for (const auto& b : report.bound_results) {
        if (b.within) ++bounds_ok;
    }

    if (format == "json") {
        nlohmann::json j;
        j["family"] = s.family;
        j["N"] = report.length;
        j["D"] = s.seq.D;
        j["psl"] = report.psl;
        j["energy"] = report.energy;
        j["merit_factor"] = report.merit_factor;
        j["is_generalized_barker"] = report.is_generalized_barker;
        j["perfect"] = report.perfect;
        j["method"] = method_name;
        j["shift_bounds_checked"] = report.bound_results.size();
        j["shift_bounds_ok"] = bounds_ok;
        const CorrProfile alpha = s.seq.size() <= 2048 ? acyclic_autocorr(s.seq, false)
                                                       : acyclic_autocorr_fast(s.seq);
        std::vector<double> mags;
        mags.reserve(alpha.values.size());
        for (const auto& v : alpha.values) mags.push_back(std::abs(v));
        j["alpha_mag"] = mags;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "family        " << s.family << "\n"
                  << "N             " << report.length << "  (D=" << s.seq.D << ")\n"
                  << "psl           " << report.psl << "\n"
                  << "energy        " << report.energy << "\n"
                  << "merit_factor  " << report.merit_factor << "\n"
                  << "barker        " << (report.is_generalized_barker ? "yes" : "no") << "\n"
                  << "perfect       " << (report.perfect ? "yes" : "NO") << "  [" << method_name
                  << "]\n";
        if (!report.bound_results.empty()) {
            std::cout << "shift bounds  " << bounds_ok << "/" << report.bound_results.size()
                      << " within\n";
        }
        if (s.seq.size() <= 32) {
            const CorrProfile alpha = acyclic_autocorr(s.seq, false);
            const CorrProfile gamma = cyclic_autocorr(s.seq, false);
            std::cout << "k     |alpha_k|    |gamma_k|\n";
            for (std::size_t k = 0; k < s.seq.size(); ++k) {
                std::printf("%-4zu  %-11.6g  %-11.6g\n", k, std::abs(alpha.values[k]),
                            std::abs(gamma.values[k]));
            }
        }
    }
    return report.perfect ? 0 : 1;
}

std::vector<long long> a_candidates(long long L, long long M) {
    const long long a_i = special_case_params(SpecialCase::i, L, M).A;
    const long long a_ii = special_case_params(SpecialCase::ii, L, M).A;
    std::vector<long long> out;
    for (long long a : {a_i, a_ii, a_ii + 2, a_ii - 2}) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    return out;
}

int cmd_verify(long long max_m, bool claims_only, bool props_only) {
    const bool run_claims = claims_only || !props_only;
    const bool run_props = props_only || !claims_only;
    const bool run_perfect = !claims_only && !props_only;

    std::size_t instances = 0, failures = 0;
    for (long long M = 2; M <= max_m; ++M) {
        for (long long L = 1; L <= M; ++L) {
            if (M % L != 0) continue;
            for (long long A : a_candidates(L, M)) {
                const SeqParams params = validate_params(L, M, A);
                ++instances;
                std::vector<std::string> bad;

                if (run_perfect) {
                    const PhaseSeq seq = lm_sequence(params);
                    const bool exact = params.N <= 512 && params.D <= max_cyclotomic_order();
                    const auto cert = verify_perfect(seq,
                                                     exact ? VerifyMethod::exact_cyclotomic
                                                           : VerifyMethod::float_threshold,
                                                     params);
                    if (!cert.perfect()) bad.push_back("perfectness");
                }
                if (run_props) {
                    if (!check_aligned_shifts(params).ok()) bad.push_back("aligned bounds");
                    if (params.L >= 2 && !check_unaligned_shifts(params).ok()) {
                        bad.push_back("unaligned bounds");
                    }
                }
                if (run_claims) {
                    if (!verify_phase_diff_all(params).ok()) {
                        bad.push_back("phase difference identities");
                    }
                }

                if (!bad.empty()) {
                    ++failures;
                    std::cout << "FAIL L=" << L << " M=" << M << " A=" << A << ":";
                    for (const auto& b : bad) std::cout << ' ' << b;
                    std::cout << '\n';
                }
            }
        }
    }
    std::cout << (failures == 0 ? "OK" : "FAILED") << ": " << instances - failures << "/"
              << instances << " parameter sets verified\n";
    return failures == 0 ? 0 : 1;
}

int cmd_sweep(const std::string& family, const std::vector<long long>& sizes,
              const std::string& out_path, const std::string& format, bool verify_mode,
              int workers, long long exact_max) {
    SweepSpec spec;
    spec.family = family_from_name(family);
    spec.sizes = sizes;
    spec.workers = workers;
    spec.exact_verify_max = exact_max;

    const auto records = sweep(spec);
    const ExportFormat fmt = format == "json" ? ExportFormat::json : ExportFormat::csv;
    if (out_path.empty()) {
        export_records(records, fmt, std::cout);
    } else {
        export_records_to_file(records, fmt, out_path);
    }

    if (verify_mode) {
        for (const auto& r : records) {
            if (!r.perfect || !r.error.empty()) {
                std::cerr << "verification failure: family=" << r.family << " N=" << r.N
                          << (r.error.empty() ? "" : " error=" + r.error) << '\n';
                return 1;
            }
        }
    }
    return 0;
}

int cmd_asymptotics(const std::string& family, long long max_n) {
    std::vector<long long> sizes;
    if (family == "frank") {
        for (long long m = 2; m * m <= max_n; m *= 2) sizes.push_back(m * m);
    } else {
        for (long long n = 16; n <= max_n; n *= 2) sizes.push_back(n);
    }
    if (sizes.empty()) raise(errc::invalid_argument, "--max-N too small");
    const AsymptoticTable table = asymptotic_table(family_from_name(family), sizes);
    std::cout << format_asymptotic_table(table);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect polyphase sequence toolkit"};
    app.require_subcommand(1);

    SequenceSelection sel;
    std::string format = "json";

    auto add_selection = [&sel](CLI::App* cmd) {
        cmd->add_option("--L", sel.L, "block length L")->each([&sel](const std::string&) {
            sel.has_L = true;
        });
        cmd->add_option("--M", sel.M, "block count M")->each([&sel](const std::string&) {
            sel.has_M = true;
        });
        cmd->add_option("--A", sel.A, "phase offset A")->each([&sel](const std::string&) {
            sel.has_A = true;
        });
        cmd->add_option("--special", sel.special, "frank|chu|milewski");
        cmd->add_option("--G", sel.G, "milewski base G");
        cmd->add_option("--H", sel.H, "milewski height H");
    };

    CLI::App* gen = app.add_subcommand("gen", "construct a sequence and print it");
    add_selection(gen);
    gen->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* analyze =
        app.add_subcommand("analyze", "autocorrelation metrics and perfectness verdict");
    add_selection(analyze);
    bool force_exact = false, force_fast = false;
    std::string analyze_format = "text";
    analyze->add_flag("--exact", force_exact, "force exact cyclotomic verification");
    analyze->add_flag("--fast", force_fast, "force float FFT verification");
    analyze->add_option("--format", analyze_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "batch verification across the (L, M, A) parameter grid");
    long long max_m = 12;
    bool claims_only = false, props_only = false;
    verify->add_option("--max-M", max_m, "largest M in the grid (default 12)");
    verify->add_flag("--claims", claims_only, "phase difference identities only");
    verify->add_flag("--props", props_only, "autocorrelation bound checks only");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a family and export records");
    std::string family, out_path, sweep_format = "csv";
    std::vector<long long> sizes;
    bool verify_mode = false;
    int workers = 0;
    long long exact_max = 512;
    sweep_cmd->add_option("--family", family, "frank|chu|milewski|lm")->required();
    sweep_cmd->add_option("--sizes", sizes, "size list (comma separated)")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--out", out_path, "output path (default stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_flag("--verify", verify_mode, "exit nonzero unless every record is perfect");
    sweep_cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--exact-max", exact_max, "exact perfectness verification up to this N");

    CLI::App* asym = app.add_subcommand("asymptotics", "PSL and energy ratio table");
    std::string asym_family = "frank";
    long long max_n = 4096;
    asym->add_option("--family", asym_family, "frank|chu")
        ->check(CLI::IsMember({"frank", "chu"}));
    asym->add_option("--max-N", max_n, "largest sequence length (default 4096)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(sel, format);
        if (analyze->parsed()) return cmd_analyze(sel, force_exact, force_fast, analyze_format);
        if (verify->parsed()) return cmd_verify(max_m, claims_only, props_only);
        if (sweep_cmd->parsed()) {
            return cmd_sweep(family, sizes, out_path, sweep_format, verify_mode, workers,
                             exact_max);
        }
        if (asym->parsed()) return cmd_asymptotics(asym_family, max_n);
    } catch (const SeqError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == errc::io_error ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
