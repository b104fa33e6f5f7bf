#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "polyseq/paperchecks.hpp"

using namespace polyseq;

namespace {

template <typename F>
errc expect_error(F&& f) {
    try {
        f();
    } catch (const SeqError& e) {
        return e.code();
    }
    FAIL("expected a SeqError");
    return errc::invalid_argument;
}

PhaseSeq make_seq(long long d, std::vector<long long> exps) {
    PhaseSeq s;
    s.D = d;
    s.exps = std::move(exps);
    return s;
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

} // namespace

TEST_CASE("decompose_shift: examples and round trips") {
    const SeqParams p = validate_params(2, 4, 0);

    const auto mult = decompose_shift(4, p);
    CHECK(mult.multiple_of_L);
    CHECK(mult.q == 2);
    CHECK(mult.r == 2);
    CHECK(mult.q + mult.r == p.M);

    const auto non = decompose_shift(3, p);
    CHECK_FALSE(non.multiple_of_L);
    CHECK(non.q == 1);
    CHECK(*non.k1 == 1);
    CHECK(non.r == 2);
    CHECK(*non.k2 == 1);
    CHECK(*non.qt == 2);
    CHECK(*non.k1 + *non.k2 == p.L);
    CHECK(non.q + non.r == p.M - 1);

    CHECK(expect_error([&] { decompose_shift(0, p); }) == errc::out_of_range);
    CHECK(expect_error([&] { decompose_shift(8, p); }) == errc::out_of_range);

    for (long long L : {2LL, 3LL, 4LL, 6LL}) {
        for (long long M : {L, 2 * L, 4 * L}) {
            const SeqParams params = special_case_params(SpecialCase::ii, L, M);
            for (long long k = 1; k < params.N; ++k) {
                const auto d = decompose_shift(k, params);
                if (d.multiple_of_L) {
                    CHECK(d.q * L == k);
                    CHECK(d.r * L == params.N - k);
                    CHECK(d.q + d.r == M);
                    CHECK(1 <= d.q);
                    CHECK(d.q <= M - 1);
                } else {
                    CHECK(d.q * L + *d.k1 == k);
                    CHECK(d.r * L + *d.k2 == params.N - k);
                    CHECK(*d.k1 + *d.k2 == L);
                    CHECK(d.q + d.r == M - 1);
                }
            }
        }
    }
}

TEST_CASE("psl / energy / merit_factor: frozen examples") {
    const auto frank4 = acyclic_autocorr(make_seq(4, {0, 0, 0, 2}), false);
    CHECK(psl(frank4) == doctest::Approx(1.0));
    CHECK(energy(frank4) == doctest::Approx(2.0));
    CHECK(merit_factor(frank4) == doctest::Approx(4.0));

    const auto chu2 = acyclic_autocorr(chu_sequence(2), false);
    CHECK(psl(chu2) == doctest::Approx(1.0));
    CHECK(energy(chu2) == doctest::Approx(1.0));
    CHECK(merit_factor(chu2) == doctest::Approx(2.0));

    const auto ones3 = acyclic_autocorr(make_seq(2, {0, 0, 0}), false);
    CHECK(psl(ones3) == doctest::Approx(2.0));
    CHECK(energy(ones3) == doctest::Approx(5.0));
    CHECK(merit_factor(ones3) == doctest::Approx(0.9));
}

TEST_CASE("metrics: preconditions") {
    const auto cyclic = cyclic_autocorr(chu_sequence(4), false);
    CHECK(expect_error([&] { psl(cyclic); }) == errc::invalid_argument);
    const auto single = acyclic_autocorr(make_seq(2, {0}), false);
    CHECK(expect_error([&] { psl(single); }) == errc::too_short);
    CHECK(expect_error([&] { energy(single); }) == errc::too_short);
}

TEST_CASE("merit_factor relation to energy") {
    for (long long m : {3LL, 5LL, 8LL, 13LL, 21LL}) {
        const auto prof = acyclic_autocorr(chu_sequence(m), false);
        const double e = energy(prof);
        const double f = merit_factor(prof);
        const double n = static_cast<double>(m);
        CHECK(std::abs(f * 2.0 * e - n * n) <= 1e-9 * n * n);
    }
}

TEST_CASE("verify_perfect: positive cases") {
    const auto lm = verify_perfect(lm_sequence(validate_params(2, 4, 0)),
                                   VerifyMethod::exact_cyclotomic);
    CHECK(lm.perfect());
    CHECK(lm.verified_shifts == 7);

    CHECK(verify_perfect(chu_sequence(5), VerifyMethod::exact_cyclotomic).perfect());
    CHECK(verify_perfect(chu_sequence(64), VerifyMethod::float_threshold).perfect());
}

TEST_CASE("verify_perfect: negative controls report the failing shifts") {
    // all-ones of length 4: every gamma_k equals 4
    const auto ones = verify_perfect(make_seq(4, {0, 0, 0, 0}),
                                     VerifyMethod::exact_cyclotomic);
    CHECK_FALSE(ones.perfect());
    REQUIRE(ones.failures.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(ones.failures[i].k == static_cast<long long>(i + 1));
        CHECK(ones.failures[i].magnitude == doctest::Approx(4.0));
    }

    PhaseSeq bent = lm_sequence(validate_params(2, 4, 0));
    bent.exps[3] = (bent.exps[3] + 1) % bent.D;
    const auto exact = verify_perfect(bent, VerifyMethod::exact_cyclotomic);
    const auto floaty = verify_perfect(bent, VerifyMethod::float_threshold);
    CHECK_FALSE(exact.perfect());
    CHECK_FALSE(floaty.perfect());
    REQUIRE(!exact.failures.empty());
    // both methods must incriminate the same shifts
    REQUIRE(exact.failures.size() == floaty.failures.size());
    for (std::size_t i = 0; i < exact.failures.size(); ++i) {
        CHECK(exact.failures[i].k == floaty.failures[i].k);
    }
}

TEST_CASE("aligned shifts: exact zeros and both bounds") {
    // L = 1: every shift is aligned (Chu shape)
    const auto chu_like = check_aligned_shifts(validate_params(1, 4, 0));
    CHECK(chu_like.ok());
    CHECK(chu_like.checked_shifts == 3);

    const std::vector<std::pair<long long, long long>> shapes{
        {2, 4}, {2, 2}, {3, 6}, {4, 8}, {1, 16}, {5, 10}};
    for (auto [L, M] : shapes) {
        for (long long A : a_candidates(L, M)) {
            const auto report = check_aligned_shifts(validate_params(L, M, A));
            CHECK(report.ok());
        }
    }
}

TEST_CASE("aligned shifts: psl within sqrt(N/2) for L = 1 shapes") {
    for (long long M = 2; M <= 256; ++M) {
        const auto prof = acyclic_autocorr(chu_sequence(M), false);
        CHECK(psl(prof) <= std::sqrt(static_cast<double>(M) / 2.0) + 1e-9);
    }
}

TEST_CASE("unaligned shifts: exact zeros, two-factor bound, sqrt(N) case") {
    const std::vector<std::pair<long long, long long>> shapes{
        {2, 2}, {3, 3}, {4, 4}, {2, 4}, {2, 8}, {3, 9}, {4, 8}};
    for (auto [L, M] : shapes) {
        for (long long A : a_candidates(L, M)) {
            const auto report = check_unaligned_shifts(validate_params(L, M, A));
            CHECK(report.ok());
            CHECK(report.equality_shifts + report.strict_shifts == report.checked_shifts);
        }
    }
    CHECK(expect_error([] { check_unaligned_shifts(validate_params(1, 4, 0)); }) ==
          errc::invalid_argument);
}

TEST_CASE("frank psl stays within M") {
    for (long long M = 2; M <= 24; ++M) {
        const auto prof = acyclic_autocorr(frank_sequence(M), false);
        CHECK(psl(prof) <= static_cast<double>(M) + 1e-9);
    }
    // same ceiling through the general construction, larger M via the fast path
    for (long long M = 25; M <= 64; ++M) {
        const PhaseSeq seq = lm_sequence(special_case_params(SpecialCase::i, M, M));
        CHECK(psl(acyclic_autocorr_fast(seq)) <= static_cast<double>(M) + 1e-9);
    }
}

TEST_CASE("phase difference identity, aligned: worked examples") {
    const SeqParams p = validate_params(2, 4, 0);
    // q=1 (k=2): p(2)-p(0) = 2, p(3)-p(1) = 4
    CHECK(phase_polynomial(2, p) - phase_polynomial(0, p) == 2);
    CHECK(phase_polynomial(3, p) - phase_polynomial(1, p) == 4);
    CHECK(verify_phase_diff_aligned(p, 1).ok());

    // p(j) = j^2 + j: difference across k=1 is 2j + 2
    const SeqParams odd = validate_params(1, 3, 1);
    const auto report = verify_phase_diff_aligned(odd, 1);
    CHECK(report.ok());
    CHECK(report.checked_pairs == 3);

    CHECK(expect_error([&] { verify_phase_diff_aligned(p, 0); }) == errc::invalid_argument);
    CHECK(expect_error([&] { verify_phase_diff_aligned(p, 4); }) == errc::invalid_argument);
}

TEST_CASE("phase difference identity, head and tail: worked examples") {
    const SeqParams p = validate_params(2, 4, 0);
    // head, q=1, k1=1 (k=3), i=1, j=2: p(5)-p(2) = 10 = 2+4+2+2
    CHECK(phase_polynomial(5, p) - phase_polynomial(2, p) == 10);
    CHECK(verify_phase_diff_head(p, 1, 1).ok());
    CHECK(verify_phase_diff_head(p, 0, 1).ok());

    // tail, q=0, k1=1 (qt=1), i=0, j=1: p(2)-p(1) = 2
    CHECK(phase_polynomial(2, p) - phase_polynomial(1, p) == 2);
    CHECK(verify_phase_diff_tail(p, 0, 1).ok());
    // tail, q=1 (qt=2), i=0, j=1: p(4)-p(1) = 8
    CHECK(phase_polynomial(4, p) - phase_polynomial(1, p) == 8);
    CHECK(verify_phase_diff_tail(p, 1, 1).ok());

    CHECK(expect_error([&] { verify_phase_diff_head(p, 0, 2); }) == errc::invalid_argument);
    CHECK(expect_error([&] { verify_phase_diff_head(p, 4, 1); }) == errc::invalid_argument);
}

TEST_CASE("phase difference identities hold across a parameter grid") {
    for (long long M = 2; M <= 16; ++M) {
        for (long long L = 1; L <= M; ++L) {
            if (M % L != 0 || L * M > 128) continue;
            for (long long A : a_candidates(L, M)) {
                const auto report = verify_phase_diff_all(validate_params(L, M, A));
                CHECK(report.ok());
                CHECK(report.checked_pairs > 0);
            }
        }
    }
}

TEST_CASE("zero cyclic shifts pin the acyclic magnitudes") {
    const std::vector<std::pair<long long, long long>> shapes{
        {1, 12}, {2, 6}, {3, 6}, {2, 10}, {4, 4}};
    for (auto [L, M] : shapes) {
        const SeqParams params = special_case_params(SpecialCase::ii, L, M);
        const PhaseSeq seq = lm_sequence(params);
        const auto alpha = acyclic_autocorr(seq, false);
        const auto gamma = cyclic_autocorr(seq, true);
        for (std::size_t k = 1; k < seq.size(); ++k) {
            REQUIRE(rootsum_is_zero((*gamma.exact)[k]));
            const double ak = std::abs(alpha.values[k]);
            const double limit = static_cast<double>(
                std::min(k, seq.size() - k));
            CHECK(std::abs(ak - std::abs(alpha.values[seq.size() - k])) < 1e-9);
            CHECK(ak <= limit + 1e-9);
        }
    }
}

TEST_CASE("analyze_sequence assembles the report") {
    const SeqParams params = validate_params(2, 4, 0);
    const auto report = analyze_sequence(lm_sequence(params), params,
                                         VerifyMethod::exact_cyclotomic);
    CHECK(report.length == 8);
    CHECK(report.perfect);
    CHECK(report.bound_results.size() == 7);
    for (const auto& b : report.bound_results) CHECK(b.within);
    const double n2 = 64.0;
    CHECK(std::abs(report.merit_factor * 2.0 * report.energy - n2) <= 1e-9 * n2);

    // generalized Barker flag: Chu length 2 has psl exactly 1
    const auto barker = analyze_sequence(chu_sequence(2), std::nullopt,
                                         VerifyMethod::exact_cyclotomic);
    CHECK(barker.is_generalized_barker);
    const auto ones = analyze_sequence(make_seq(2, {0, 0, 0}), std::nullopt,
                                       VerifyMethod::exact_cyclotomic);
    CHECK_FALSE(ones.is_generalized_barker);
    CHECK_FALSE(ones.perfect);
}
