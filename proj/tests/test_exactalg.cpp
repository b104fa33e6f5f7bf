#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "polyseq/config.hpp"
#include "polyseq/exactalg.hpp"

using namespace polyseq;

namespace {

long long totient(long long n) {
    long long count = 0;
    for (long long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++count;
    }
    return count;
}

IntPolynomial poly(std::initializer_list<long long> ascending) {
    std::vector<IntPolynomial::Coeff> c;
    for (long long v : ascending) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("delta: distance to the nearest multiple") {
    CHECK(delta(19, 12) == 5);
    CHECK(delta(29, 12) == 5);
    CHECK(delta(12, 12) == 0);
    CHECK(delta(7, 14) == 7);  // exact midpoint
    CHECK(delta(0, 5) == 0);
}

TEST_CASE("delta: periodicity and reflection") {
    for (long long D = 1; D <= 64; ++D) {
        for (long long k = 0; k <= 3 * D; ++k) {
            CHECK(delta(k + D, D) == delta(k, D));
            CHECK(delta(D - k % D + D, D) == delta(k, D));
            CHECK(delta(k, D) <= D / 2);
        }
    }
}

TEST_CASE("abs_one_minus_exp matches direct complex evaluation") {
    CHECK(abs_one_minus_exp(std::numbers::pi) == doctest::Approx(2.0));
    CHECK(abs_one_minus_exp(0.0) == doctest::Approx(0.0));
    CHECK(abs_one_minus_exp(std::numbers::pi / 2) == doctest::Approx(std::sqrt(2.0)));
    for (int i = -50; i <= 50; ++i) {
        const double x = 0.17 * i;
        const double direct = std::abs(1.0 - std::exp(std::complex<double>(0.0, x)));
        CHECK(std::abs(abs_one_minus_exp(x) - direct) < 1e-12);
    }
}

TEST_CASE("csc_bound: examples") {
    auto b = csc_bound(1, 4);
    CHECK(b.exact == doctest::Approx(std::sqrt(2.0)));
    CHECK(b.coarse == doctest::Approx(2.0));

    b = csc_bound(2, 4);  // midpoint: both bounds collapse to 1
    CHECK(b.exact == doctest::Approx(1.0));
    CHECK(b.coarse == doctest::Approx(1.0));

    auto b19 = csc_bound(19, 12);
    auto b5 = csc_bound(5, 12);
    CHECK(b19.exact == doctest::Approx(b5.exact));
    CHECK(b19.coarse == doctest::Approx(b5.coarse));
}

TEST_CASE("csc_bound: pole and exact <= coarse") {
    CHECK_THROWS_WITH_AS(csc_bound(8, 4), doctest::Contains("MultipleOfD"), SeqError);
    CHECK_THROWS_AS(csc_bound(0, 5), SeqError);
    for (long long D = 2; D <= 64; ++D) {
        for (long long k = 1; k <= 3 * D; ++k) {
            if (k % D == 0) continue;
            const auto bound = csc_bound(k, D);
            CHECK(bound.exact <= bound.coarse + 1e-12);
            CHECK(bound.exact >= 1.0);
        }
    }
}

TEST_CASE("cyclotomic_poly: known small cases") {
    CHECK(cyclotomic_poly(1) == poly({-1, 1}));
    CHECK(cyclotomic_poly(2) == poly({1, 1}));
    CHECK(cyclotomic_poly(3) == poly({1, 1, 1}));
    CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic_poly: first coefficient outside {-1,0,1} at order 105") {
    const auto& phi = cyclotomic_poly(105);
    CHECK(phi.coeff(7) == -2);
    CHECK(phi.is_monic());
}

TEST_CASE("cyclotomic_poly: product over divisors is x^n - 1, degree is totient") {
    for (long long n = 1; n <= 256; ++n) {
        IntPolynomial product = poly({1});
        for (long long d = 1; d <= n; ++d) {
            if (n % d == 0) product = product.multiply(cyclotomic_poly(d));
        }
        CHECK(product == IntPolynomial::power_minus_one(n));
        CHECK(cyclotomic_poly(n).degree() == totient(n));
    }
}

TEST_CASE("cyclotomic_poly: order limits") {
    CHECK_THROWS_AS(cyclotomic_poly(0), SeqError);
    const long long cap = max_cyclotomic_order();
    set_max_cyclotomic_order(64);
    CHECK_THROWS_WITH_AS(cyclotomic_poly(65), doctest::Contains("OrderCap"), SeqError);
    set_max_cyclotomic_order(cap);
}

TEST_CASE("IntPolynomial: division") {
    // x^3 mod (x^2 + 1) = -x
    CHECK(poly({0, 0, 0, 1}).mod_monic(poly({1, 0, 1})) == poly({0, -1}));
    // (x^2 - 1) / (x - 1) = x + 1
    CHECK(poly({-1, 0, 1}).divide_exact(poly({-1, 1})) == poly({1, 1}));
    CHECK_THROWS_AS(poly({1, 1, 1}).divide_exact(poly({-1, 1})), SeqError);
    CHECK_THROWS_AS(poly({1}).divide_exact(IntPolynomial()), SeqError);
}

TEST_CASE("rootsum_is_zero: examples") {
    RootSum cubes(6);  // the three cube roots of unity inside the 6th roots
    cubes.add_root(0);
    cubes.add_root(2);
    cubes.add_root(4);
    CHECK(rootsum_is_zero(cubes));

    RootSum one_plus_i(4);
    one_plus_i.add_root(0);
    one_plus_i.add_root(1);
    CHECK_FALSE(rootsum_is_zero(one_plus_i));

    CHECK(rootsum_is_zero(RootSum(4)));  // empty sum
}

TEST_CASE("RootSum: arithmetic, conjugation, lifting") {
    RootSum a(8);
    a.add_root(1, 2);
    a.add_root(-1);  // reduces to exponent 7
    CHECK(a.count(7) == 1);

    RootSum b(8);
    b.add_root(1, -2);
    RootSum sum = a;
    sum += b;
    CHECK(sum.count(1) == 0);

    RootSum other(4);
    CHECK_THROWS_WITH_AS(sum += other, doctest::Contains("OrderMismatch"), SeqError);

    const auto conj = a.conjugate();
    const auto direct = std::conj(a.to_complex());
    CHECK(std::abs(conj.to_complex() - direct) < 1e-12);

    const auto lifted = a.lift_to(16);
    CHECK(std::abs(lifted.to_complex() - a.to_complex()) < 1e-12);
    CHECK(lifted.count(2) == 2);

    RootSum zero(6);
    zero.add_root(0);
    zero.add_root(2);
    zero.add_root(4);
    CHECK(rootsum_is_zero(zero.lift_to(12)));
    CHECK_THROWS_AS(a.lift_to(12), SeqError);  // 12 not a multiple of 8
}

TEST_CASE("geometric_root_sum: examples") {
    CHECK(rootsum_is_zero(geometric_root_sum(1, 4, 0, 4)));  // full period

    const auto half = geometric_root_sum(1, 4, 0, 2);  // 1 + i
    CHECK(std::abs(half.to_complex() - std::complex<double>(1.0, 1.0)) < 1e-12);
    // meets the cosecant bound with equality
    CHECK(std::abs(half.to_complex()) == doctest::Approx(csc_bound(1, 4).exact));

    const auto constant = geometric_root_sum(4, 4, 0, 3);  // k multiple of D
    CHECK(constant.count(0) == 3);
    CHECK(std::abs(constant.to_complex() - std::complex<double>(3.0, 0.0)) < 1e-12);

    CHECK_THROWS_AS(geometric_root_sum(1, 4, 2, 2), SeqError);  // empty range
}

TEST_CASE("geometric_root_sum: full periods vanish exactly") {
    for (long long D = 1; D <= 64; ++D) {
        for (long long k = 1; k <= 3 * D; ++k) {
            if (k % D == 0) continue;
            for (long long a : {-7LL, 0LL, 5LL}) {
                CHECK(rootsum_is_zero(geometric_root_sum(k, D, a, a + D)));
            }
        }
    }
}

TEST_CASE("geometric_root_sum: magnitude obeys the cosecant bound") {
    std::size_t checked = 0;
    for (long long D = 2; D <= 64; ++D) {
        for (long long k = 1; k < D; ++k) {
            const double bound = csc_bound(k, D).exact;
            for (long long a : {0LL, 3LL, 2 * D - 1}) {
                for (long long b = a + 1; b <= a + 2 * D; ++b) {
                    const double mag = std::abs(geometric_root_sum(k, D, a, b).to_complex());
                    ++checked;
                    if (mag > bound + 1e-9) {
                        CAPTURE(k);
                        CAPTURE(D);
                        CAPTURE(a);
                        CAPTURE(b);
                        REQUIRE(mag <= bound + 1e-9);
                    }
                }
            }
        }
    }
    CHECK(checked > 500000);
}
