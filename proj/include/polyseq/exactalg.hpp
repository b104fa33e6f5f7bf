// Exact arithmetic over formal sums of D-th roots of unity.
//
// A RootSum holds one integer multiplicity per exponent class mod D. Zero
// testing is exact: the exponent polynomial is reduced modulo the D-th
// cyclotomic polynomial over the integers, so a sum evaluates to zero iff
// the remainder vanishes. Also provides the distance function delta(k, D)
// and the cosecant bounds on partial geometric sums.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyseq/errors.hpp"

namespace polyseq {

// Floor-convention remainder, always in [0, m).
inline long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Distance from k to the nearest multiple of D. Result in [0, D/2].
long long delta(long long k, long long D);

// |1 - e^{ix}| evaluated as 2|sin(x/2)|.
double abs_one_minus_exp(double x);

struct CscBound {
    double exact;   // csc(pi * delta(k,D) / D)
    double coarse;  // D / (2 * delta(k,D)); always >= exact
};

// Bounds on |sum of a run of ζ_D^{kj}|. Throws multiple_of_d when D | k.
CscBound csc_bound(long long k, long long D);

// Integer polynomial with arbitrary-precision coefficients, ascending
// degree, trimmed so the leading coefficient is nonzero (empty = zero).
class IntPolynomial {
public:
    using Coeff = boost::multiprecision::cpp_int;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Coeff> ascending_coeffs);

    static IntPolynomial power_minus_one(long long n);  // x^n - 1

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    Coeff coeff(long long i) const;
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    bool is_monic() const;

    IntPolynomial multiply(const IntPolynomial& other) const;

    // Quotient of exact division; throws invalid_argument if the division
    // leaves a remainder. Divisor must be monic.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    // Remainder after long division by a monic divisor.
    IntPolynomial mod_monic(const IntPolynomial& divisor) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();

    std::vector<Coeff> coeffs_;
};

// n-th cyclotomic polynomial, computed by dividing x^n - 1 by the product
// of the lower-order cyclotomics over the proper divisors of n. Memoized
// and thread-safe; throws order_cap above the configured maximum.
const IntPolynomial& cyclotomic_poly(long long n);

// Formal integer combination of the D-th roots of unity.
class RootSum {
public:
    explicit RootSum(long long order);

    // Adopts a dense multiplicity vector; counts.size() must equal order.
    static RootSum from_counts(long long order, std::vector<long long> counts);

    long long order() const { return order_; }
    const std::vector<long long>& counts() const { return counts_; }
    long long count(long long exponent) const;

    // Adds multiplicity at ζ_D^exponent; any integer exponent is reduced mod D.
    void add_root(long long exponent, long long multiplicity = 1);

    RootSum& operator+=(const RootSum& other);  // orders must match
    RootSum& operator-=(const RootSum& other);
    RootSum conjugate() const;

    // Reinterprets the sum over a larger root order (new_order = m * D maps
    // exponent e to m*e). Conversions between orders are always explicit.
    RootSum lift_to(long long new_order) const;

    std::complex<double> to_complex() const;

    friend bool operator==(const RootSum& a, const RootSum& b) {
        return a.order_ == b.order_ && a.counts_ == b.counts_;
    }

private:
    long long order_;
    std::vector<long long> counts_;
};

// Exact zero test via reduction modulo the D-th cyclotomic polynomial.
bool rootsum_is_zero(const RootSum& s);

// Sum of ζ_D^{kj} for j in [a, b) as a RootSum. Over any full period of D
// consecutive terms the sum vanishes exactly whenever D does not divide k,
// and its magnitude never exceeds csc_bound(k, D).exact.
RootSum geometric_root_sum(long long k, long long D, long long a, long long b);

} // namespace polyseq
