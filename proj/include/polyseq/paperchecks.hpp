// Executable verification of the structural facts behind perfectness:
// exact zero cyclic autocorrelation at every shift, the per-shift cosecant
// and sqrt(N/2) bounds for block-aligned shifts, the two-factor magnitude
// bound and sqrt(N) bound for unaligned shifts, and the closed-form phase
// difference identities the proofs rest on. Also the scalar metrics
// (PSL, energy, merit factor).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyseq/correlation.hpp"
#include "polyseq/seqcore.hpp"

namespace polyseq {

// Split of a shift k in [1, N-1] relative to the block length L.
// Either k and N-k are both multiples of L (k = q*L, N-k = r*L, q+r = M)
// or both nonmultiples (k = q*L + k1, N-k = r*L + k2, k1+k2 = L, q+r = M-1).
struct ShiftDecomposition {
    long long k = 0;
    bool multiple_of_L = false;
    long long q = 0;
    long long r = 0;
    std::optional<long long> k1;  // nonmultiple case only, in [1, L-1]
    std::optional<long long> k2;  // L - k1
    std::optional<long long> qt;  // q + 1
};

ShiftDecomposition decompose_shift(long long k, const SeqParams& params);

// Scalar metrics over an acyclic profile (shifts k in [1, N-1]).
double psl(const CorrProfile& profile);
double energy(const CorrProfile& profile);
// N^2 / (2 * energy); +infinity when every nontrivial alpha vanishes.
double merit_factor(const CorrProfile& profile);

enum class VerifyMethod {
    exact_cyclotomic,  // rootsum_is_zero on every gamma_k
    float_threshold,   // |gamma_k| <= 1e-8 * N
};

struct ShiftFailure {
    long long k = 0;
    double magnitude = 0.0;  // |gamma_k| as evaluated in floats
};

struct PerfectnessCertificate {
    std::optional<SeqParams> params;
    std::size_t verified_shifts = 0;
    VerifyMethod method = VerifyMethod::exact_cyclotomic;
    std::vector<ShiftFailure> failures;

    bool perfect() const { return failures.empty(); }
};

PerfectnessCertificate verify_perfect(const PhaseSeq& seq, VerifyMethod method,
                                      std::optional<SeqParams> params = std::nullopt);

struct BoundViolation {
    long long k = 0;
    std::string what;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct ShiftBoundReport {
    std::size_t checked_shifts = 0;
    std::vector<BoundViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Shifts with L | k: exact gamma_k == 0, |alpha_k| <= csc(pi*k/N) + 1e-9,
// and |alpha_k| <= sqrt(N/2) + 1e-9.
ShiftBoundReport check_aligned_shifts(const SeqParams& params);

// Shifts with L ∤ k (requires L >= 2): exact gamma_k == 0; |alpha_k| is
// bounded by the sum of the two run-magnitude products (triangle
// inequality direction; the report counts where equality holds). In the
// L == M case additionally |alpha_k| <= M + 1e-9, with the q = 0 and
// q = M-1 edge shifts checked by the direct |alpha_k| <= min(k, N-k) route.
struct UnalignedShiftReport : ShiftBoundReport {
    std::size_t equality_shifts = 0;  // |alpha_k| meets the two-factor sum
    std::size_t strict_shifts = 0;    // strictly below it
};

UnalignedShiftReport check_unaligned_shifts(const SeqParams& params);

// Closed-form phase difference identities, checked over the integers with
// no modular reduction.
struct PhaseDiffViolation {
    long long i = 0;
    long long j = 0;
    long long lhs = 0;
    long long rhs = 0;
};

struct PhaseDiffReport {
    std::size_t checked_pairs = 0;
    std::vector<PhaseDiffViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Aligned shift k = q*L, 1 <= q <= M-1: for every block i in [0, M-1] and
// j in [i*L, (i+1)*L - 1],
//   p(j+k) - p(j) == 2*q*j + L*q^2 + A*q.
PhaseDiffReport verify_phase_diff_aligned(const SeqParams& params, long long q);

// Unaligned shift k = q*L + k1 (0 <= q, 1 <= k1 <= L-1, k <= N-1),
// k2 = L - k1. Head of each block, j in [i*L, i*L + k2 - 1]:
//   p(j+k) - p(j) == 2*i*k1 + 2*q*j + 2*q*k1 + L*q^2 + A*q.
PhaseDiffReport verify_phase_diff_head(const SeqParams& params, long long q, long long k1);

// Tail of each block, j in [i*L + k2, (i+1)*L - 1], with qt = q + 1:
//   p(j+k) - p(j) == -2*i*k2 + 2*qt*j - 2*qt*k2 + L*qt^2 + A*qt.
PhaseDiffReport verify_phase_diff_tail(const SeqParams& params, long long q, long long k1);

// All (q), (q, k1) combinations of the three identities for one parameter set.
PhaseDiffReport verify_phase_diff_all(const SeqParams& params);

// Per-shift bound outcome for reporting.
struct ShiftBoundOutcome {
    long long k = 0;
    bool multiple_of_L = false;
    double alpha_mag = 0.0;
    double bound = 0.0;  // csc bound (aligned) or two-factor sum (unaligned)
    bool within = false;
};

struct MetricsReport {
    std::size_t length = 0;
    double psl = 0.0;
    double energy = 0.0;
    double merit_factor = 0.0;
    bool is_generalized_barker = false;  // psl <= 1 + 1e-12
    bool perfect = false;
    VerifyMethod method = VerifyMethod::exact_cyclotomic;
    std::vector<ShiftBoundOutcome> bound_results;  // populated when params known
};

MetricsReport analyze_sequence(const PhaseSeq& seq, std::optional<SeqParams> params,
                               VerifyMethod method);

} // namespace polyseq
