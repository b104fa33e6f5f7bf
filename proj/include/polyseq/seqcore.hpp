// Sequence constructions: parameter validation, the block index split
// j = s*L + t, the phase polynomial p(j) = 2*s*t + L*s^2 + A*s over ζ_{2M},
// and the classical Frank / Chu / Milewski constructors used as independent
// cross-checks.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "polyseq/errors.hpp"

namespace polyseq {

// Validated (L, M, A) triple. L divides M, M >= 2, A has the parity of L*M.
struct SeqParams {
    long long L = 0;  // block length
    long long M = 0;  // block count
    long long A = 0;  // phase offset parameter
    long long N = 0;  // sequence length, L*M
    long long D = 0;  // phase modulus, 2*M
};

SeqParams validate_params(long long L, long long M, long long A);

// j = s*L + t with 0 <= t < L.
struct IndexSplit {
    long long j = 0;
    long long s = 0;
    long long t = 0;
};

IndexSplit split_index(long long j, long long L);

// Raw integer value of p(j), before any modular reduction.
long long phase_polynomial(long long j, const SeqParams& params);

// p(j) reduced mod 2M, in [0, D). Periodic: p(j+N) = p(j) mod 2M.
long long phase_exponent(long long j, const SeqParams& params);

// A polyphase sequence stored as integer phase exponents modulo D.
// Entry j represents ζ_D^{exps[j]}; exponents are kept reduced in [0, D).
struct PhaseSeq {
    long long D = 1;
    std::vector<long long> exps;

    std::size_t size() const { return exps.size(); }
};

// The 2M-phase sequence of length N = L*M with exponents p(j) mod 2M.
PhaseSeq lm_sequence(const SeqParams& params);

enum class SpecialCase {
    i,   // A = M when M even, A = L when M odd
    ii,  // A = 0 when M even, A = L when M odd
};

SeqParams special_case_params(SpecialCase kind, long long L, long long M);

// Classical constructions, implemented from the literature closed forms
// (not by delegating to lm_sequence) so equivalence tests compare two
// independent code paths.

// Length M^2 over D = M: exps[s*M + t] = s*t mod M. Doubling the exponents
// to D = 2M reproduces lm_sequence(special_case_params(i, M, M)).
PhaseSeq frank_sequence(long long M);

// Length M over D = 2M: j^2 (M even) or j^2 + j (M odd), mod 2M. Equals
// lm_sequence(special_case_params(ii, 1, M)).
PhaseSeq chu_sequence(long long M);

// Length G^(2H+1) over D = 2*G^(H+1), from the closed form over ζ_{G^(H+1)}
// with exponents doubled. Equals lm_sequence(special_case_params(ii, G^H, G^(H+1))).
PhaseSeq milewski_sequence(long long G, long long H);

// Same sequence over modulus 2D (every exponent doubled).
PhaseSeq double_modulus(const PhaseSeq& seq);

// Entry j as exp(2*pi*i*exps[j] / D); every entry has modulus 1.
std::vector<std::complex<double>> as_complex(const PhaseSeq& seq);

} // namespace polyseq
