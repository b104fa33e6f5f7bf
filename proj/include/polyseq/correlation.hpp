// Acyclic and cyclic autocorrelation of phase sequences, in exact
// exponent-sum form and complex-float form, plus an FFT-based fast path
// for the cyclic (and acyclic) profiles.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "polyseq/exactalg.hpp"
#include "polyseq/seqcore.hpp"

namespace polyseq {

enum class CorrKind { cyclic, acyclic };

// Autocorrelation values per shift k in [0, N). values[0] == N always.
// When present, `exact` holds the same profile as formal root sums whose
// float evaluation matches `values` within 1e-10 * N componentwise.
struct CorrProfile {
    CorrKind kind = CorrKind::cyclic;
    std::size_t length = 0;
    std::vector<std::complex<double>> values;
    std::optional<std::vector<RootSum>> exact;

    // Bounds-checked access; negative shifts are rejected, not aliased.
    const std::complex<double>& at(long long k) const;
};

// Direct-summation paths (the definitional ground truth). Exact root-sum
// profiles are populated unless with_exact is false (N * D memory).
CorrProfile acyclic_autocorr(const PhaseSeq& seq, bool with_exact = true);
CorrProfile cyclic_autocorr(const PhaseSeq& seq, bool with_exact = true);

// Transform-based paths, O(N log N), float values only. Power-of-two
// lengths transform directly; other lengths go through a zero-padded
// power-of-two transform and the cyclic profile is reassembled from the
// linear correlation lags.
CorrProfile cyclic_autocorr_fast(const PhaseSeq& seq);
CorrProfile acyclic_autocorr_fast(const PhaseSeq& seq);

// Checks the wraparound identity gamma_k = alpha_k + conj(alpha_{N-k}) for
// every k in [1, N-1], exactly on root sums and within 1e-10 * N in floats;
// where the exact gamma_k is zero it additionally checks
// |alpha_k| == |alpha_{N-k}| within the same float tolerance.
struct WraparoundViolation {
    long long k = 0;
    std::string what;
    std::complex<double> lhs;
    std::complex<double> rhs;
};

struct WraparoundReport {
    std::size_t checked_shifts = 0;
    std::vector<WraparoundViolation> violations;

    bool ok() const { return violations.empty(); }
};

WraparoundReport check_wraparound_identity(const PhaseSeq& seq);

} // namespace polyseq
