#include "polyseq/exactalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "polyseq/config.hpp"

namespace polyseq {

long long delta(long long k, long long D) {
    if (D < 1) raise(errc::non_positive, "delta requires D >= 1");
    long long r = mod_floor(k, D);
    return std::min(r, D - r);
}

double abs_one_minus_exp(double x) {
    return 2.0 * std::abs(std::sin(x / 2.0));
}

CscBound csc_bound(long long k, long long D) {
    if (D < 1) raise(errc::non_positive, "csc_bound requires D >= 1");
    long long kp = delta(k, D);
    if (kp == 0) raise(errc::multiple_of_d, "cosecant pole at k = " + std::to_string(k));
    double exact = 1.0 / std::sin(std::numbers::pi * static_cast<double>(kp) /
                                  static_cast<double>(D));
    double coarse = static_cast<double>(D) / (2.0 * static_cast<double>(kp));
    return {exact, coarse};
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Coeff> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::power_minus_one(long long n) {
    if (n < 1) raise(errc::non_positive, "x^n - 1 requires n >= 1");
    std::vector<Coeff> c(static_cast<std::size_t>(n) + 1);
    c.front() = -1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial::Coeff IntPolynomial::coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool IntPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPolynomial IntPolynomial::multiply(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<Coeff> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

namespace {

// Long division by a monic divisor; everything stays in the integers.
void divide_monic(const std::vector<IntPolynomial::Coeff>& num,
                  const std::vector<IntPolynomial::Coeff>& div,
                  std::vector<IntPolynomial::Coeff>& quot,
                  std::vector<IntPolynomial::Coeff>& rem) {
    rem = num;
    const std::size_t dn = div.size() - 1;  // divisor degree
    if (rem.size() <= dn) {
        quot.clear();
        return;
    }
    quot.assign(rem.size() - dn, 0);
    for (std::size_t top = rem.size(); top > dn; --top) {
        const std::size_t d = top - 1;          // current degree position
        IntPolynomial::Coeff lead = rem[d];
        if (lead == 0) continue;
        quot[d - dn] = lead;
        for (std::size_t i = 0; i <= dn; ++i) {
            rem[d - dn + i] -= lead * div[i];
        }
    }
    rem.resize(dn);
}

} // namespace

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) raise(errc::invalid_argument, "division by zero polynomial");
    if (!divisor.is_monic()) raise(errc::invalid_argument, "divisor must be monic");
    if (is_zero()) return {};
    std::vector<Coeff> quot, rem;
    divide_monic(coeffs_, divisor.coeffs_, quot, rem);
    if (std::any_of(rem.begin(), rem.end(), [](const Coeff& c) { return c != 0; })) {
        raise(errc::invalid_argument, "division leaves a remainder");
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) raise(errc::invalid_argument, "division by zero polynomial");
    if (!divisor.is_monic()) raise(errc::invalid_argument, "divisor must be monic");
    if (is_zero()) return {};
    std::vector<Coeff> quot, rem;
    divide_monic(coeffs_, divisor.coeffs_, quot, rem);
    return IntPolynomial(std::move(rem));
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

std::mutex g_cyclo_mutex;
std::map<long long, IntPolynomial> g_cyclo_cache;
// Machine-word copies of the coefficients, for the fast reduction path.
std::map<long long, std::vector<long long>> g_cyclo_cache_i64;

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> divs;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Assumes the lock is held. Fills the cache for every divisor of n.
const IntPolynomial& cyclotomic_locked(long long n) {
    if (auto it = g_cyclo_cache.find(n); it != g_cyclo_cache.end()) return it->second;
    for (long long d : divisors_of(n)) {
        if (g_cyclo_cache.count(d)) continue;
        IntPolynomial product({1});
        for (long long e : divisors_of(d)) {
            if (e == d) break;
            product = product.multiply(g_cyclo_cache.at(e));
        }
        g_cyclo_cache.emplace(d, IntPolynomial::power_minus_one(d).divide_exact(product));
    }
    return g_cyclo_cache.at(n);
}

// Returns a copy so callers reduce without holding the lock.
std::vector<long long> cyclotomic_i64(long long n) {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    if (auto it = g_cyclo_cache_i64.find(n); it != g_cyclo_cache_i64.end()) return it->second;
    const IntPolynomial& phi = cyclotomic_locked(n);
    std::vector<long long> c;
    c.reserve(phi.coeffs().size());
    for (const auto& x : phi.coeffs()) c.push_back(static_cast<long long>(x));
    return g_cyclo_cache_i64.emplace(n, std::move(c)).first->second;
}

} // namespace

const IntPolynomial& cyclotomic_poly(long long n) {
    if (n < 1) raise(errc::non_positive, "cyclotomic order must be >= 1");
    if (n > max_cyclotomic_order()) {
        raise(errc::order_cap, "cyclotomic order " + std::to_string(n) +
                                   " above cap " + std::to_string(max_cyclotomic_order()));
    }
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(n);
}

// ---------------------------------------------------------------------------
// RootSum

RootSum::RootSum(long long order) : order_(order) {
    if (order < 1) raise(errc::non_positive, "root order must be >= 1");
    counts_.assign(static_cast<std::size_t>(order), 0);
}

RootSum RootSum::from_counts(long long order, std::vector<long long> counts) {
    if (order < 1) raise(errc::non_positive, "root order must be >= 1");
    if (static_cast<long long>(counts.size()) != order) {
        raise(errc::invalid_argument, "counts size must equal the root order");
    }
    RootSum out(order);
    out.counts_ = std::move(counts);
    return out;
}

long long RootSum::count(long long exponent) const {
    return counts_[static_cast<std::size_t>(mod_floor(exponent, order_))];
}

void RootSum::add_root(long long exponent, long long multiplicity) {
    counts_[static_cast<std::size_t>(mod_floor(exponent, order_))] += multiplicity;
}

RootSum& RootSum::operator+=(const RootSum& other) {
    if (order_ != other.order_) raise(errc::order_mismatch, "RootSum orders differ");
    for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] += other.counts_[e];
    return *this;
}

RootSum& RootSum::operator-=(const RootSum& other) {
    if (order_ != other.order_) raise(errc::order_mismatch, "RootSum orders differ");
    for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] -= other.counts_[e];
    return *this;
}

RootSum RootSum::conjugate() const {
    RootSum out(order_);
    for (std::size_t e = 0; e < counts_.size(); ++e) {
        out.counts_[(order_ - e) % order_] = counts_[e];
    }
    return out;
}

RootSum RootSum::lift_to(long long new_order) const {
    if (new_order < order_ || new_order % order_ != 0) {
        raise(errc::order_mismatch, "lift target must be a multiple of the order");
    }
    const long long m = new_order / order_;
    RootSum out(new_order);
    for (std::size_t e = 0; e < counts_.size(); ++e) {
        out.counts_[e * static_cast<std::size_t>(m)] = counts_[e];
    }
    return out;
}

std::complex<double> RootSum::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
    for (std::size_t e = 0; e < counts_.size(); ++e) {
        if (counts_[e] == 0) continue;
        acc += static_cast<double>(counts_[e]) *
               std::polar(1.0, step * static_cast<double>(e));
    }
    return acc;
}

namespace {

// In-place reduction modulo the cyclotomic polynomial in int64, bailing out
// on any overflow so the caller can redo the division in big integers.
bool reduce_i64(std::vector<long long>& r, const std::vector<long long>& phi) {
    const std::size_t dn = phi.size() - 1;
    for (std::size_t top = r.size(); top > dn; --top) {
        const std::size_t d = top - 1;
        const long long lead = r[d];
        if (lead == 0) continue;
        for (std::size_t i = 0; i <= dn; ++i) {
            long long prod, next;
            if (__builtin_mul_overflow(lead, phi[i], &prod)) return false;
            if (__builtin_sub_overflow(r[d - dn + i], prod, &next)) return false;
            r[d - dn + i] = next;
        }
    }
    return true;
}

} // namespace

bool rootsum_is_zero(const RootSum& s) {
    const auto& counts = s.counts();
    if (std::all_of(counts.begin(), counts.end(), [](long long c) { return c == 0; })) {
        return true;
    }
    const long long D = s.order();
    if (D > max_cyclotomic_order()) {
        raise(errc::order_cap, "cyclotomic order " + std::to_string(D) + " above cap");
    }
    const std::vector<long long> phi = cyclotomic_i64(D);
    std::vector<long long> r(counts);
    if (reduce_i64(r, phi)) {
        const std::size_t dn = phi.size() - 1;
        return std::all_of(r.begin(), r.begin() + static_cast<long>(dn),
                           [](long long c) { return c == 0; });
    }
    // Overflow in the word-sized path; redo with arbitrary precision.
    std::vector<IntPolynomial::Coeff> big(counts.begin(), counts.end());
    IntPolynomial poly(std::move(big));
    return poly.mod_monic(cyclotomic_poly(D)).is_zero();
}

RootSum geometric_root_sum(long long k, long long D, long long a, long long b) {
    if (D < 1) raise(errc::non_positive, "geometric_root_sum requires D >= 1");
    if (a >= b) raise(errc::invalid_argument, "geometric_root_sum requires a < b");
    RootSum out(D);
    const long long kr = mod_floor(k, D);
    long long e = static_cast<long long>(
        static_cast<__int128>(kr) * mod_floor(a, D) % D);
    for (long long j = a; j < b; ++j) {
        out.add_root(e);
        e += kr;
        if (e >= D) e -= D;
    }
    return out;
}

} // namespace polyseq
