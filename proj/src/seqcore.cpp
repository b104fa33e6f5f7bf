#include "polyseq/seqcore.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "polyseq/config.hpp"
#include "polyseq/exactalg.hpp"

namespace polyseq {

namespace {

void check_length_cap(long long n, const char* what) {
    if (n > max_sequence_length()) {
        raise(errc::length_cap, std::string(what) + " length " + std::to_string(n) +
                                    " above cap " + std::to_string(max_sequence_length()));
    }
}

// G^E with overflow and cap guard.
long long checked_power(long long G, long long E) {
    __int128 v = 1;
    for (long long i = 0; i < E; ++i) {
        v *= G;
        if (v > (static_cast<__int128>(1) << 62)) {
            raise(errc::length_cap, "power " + std::to_string(G) + "^" + std::to_string(E) +
                                        " exceeds the representable range");
        }
    }
    return static_cast<long long>(v);
}

long long mulm(long long x, long long y, long long m) {
    return static_cast<long long>(static_cast<__int128>(x) % m * (y % m) % m);
}

long long addm(long long x, long long y, long long m) {
    return static_cast<long long>((static_cast<__int128>(x) + y) % m);
}

} // namespace

SeqParams validate_params(long long L, long long M, long long A) {
    if (L < 1 || M < 2) {
        raise(errc::non_positive, "need L >= 1 and M >= 2, got L=" + std::to_string(L) +
                                      " M=" + std::to_string(M));
    }
    if (M % L != 0) {
        raise(errc::divisibility,
              "L=" + std::to_string(L) + " does not divide M=" + std::to_string(M));
    }
    __int128 n = static_cast<__int128>(L) * M;
    if (n > (static_cast<__int128>(1) << 61)) {
        raise(errc::overflow, "L*M exceeds the representable range");
    }
    const long long N = static_cast<long long>(n);
    if (mod_floor(A, 2) != mod_floor(N, 2)) {
        raise(errc::parity, "A=" + std::to_string(A) + " must have the parity of L*M=" +
                                std::to_string(N));
    }
    return SeqParams{L, M, A, N, 2 * M};
}

IndexSplit split_index(long long j, long long L) {
    if (L < 1) raise(errc::non_positive, "split_index requires L >= 1");
    if (j < 0) raise(errc::out_of_range, "split_index requires j >= 0");
    return IndexSplit{j, j / L, j % L};
}

long long phase_polynomial(long long j, const SeqParams& params) {
    const IndexSplit ix = split_index(j, params.L);
    __int128 v = 2 * static_cast<__int128>(ix.s) * ix.t +
                 static_cast<__int128>(params.L) * ix.s * ix.s +
                 static_cast<__int128>(params.A) * ix.s;
    if (v > (static_cast<__int128>(1) << 62) || v < -(static_cast<__int128>(1) << 62)) {
        raise(errc::overflow, "p(j) exceeds the representable range at j=" + std::to_string(j));
    }
    return static_cast<long long>(v);
}

long long phase_exponent(long long j, const SeqParams& params) {
    const IndexSplit ix = split_index(j, params.L);
    const long long D = params.D;
    // Every term of p(j) mod 2M depends only on s mod 2M, so reduce before
    // the products.
    const long long s = ix.s % D;
    const long long a = mod_floor(params.A, D);
    long long v = mulm(addm(s, s, D), ix.t, D);
    v = addm(v, mulm(mulm(params.L, s, D), s, D), D);
    v = addm(v, mulm(a, s, D), D);
    return v;
}

PhaseSeq lm_sequence(const SeqParams& params) {
    check_length_cap(params.N, "LM sequence");
    PhaseSeq seq;
    seq.D = params.D;
    seq.exps.resize(static_cast<std::size_t>(params.N));
    for (long long j = 0; j < params.N; ++j) {
        seq.exps[static_cast<std::size_t>(j)] = phase_exponent(j, params);
    }
    return seq;
}

SeqParams special_case_params(SpecialCase kind, long long L, long long M) {
    const bool even = (mod_floor(M, 2) == 0);
    long long A = 0;
    switch (kind) {
        case SpecialCase::i: A = even ? M : L; break;
        case SpecialCase::ii: A = even ? 0 : L; break;
    }
    return validate_params(L, M, A);
}

PhaseSeq frank_sequence(long long M) {
    if (M < 2) raise(errc::non_positive, "Frank sequence requires M >= 2");
    const long long N = checked_power(M, 2);
    check_length_cap(N, "Frank sequence");
    PhaseSeq seq;
    seq.D = M;
    seq.exps.resize(static_cast<std::size_t>(N));
    for (long long s = 0; s < M; ++s) {
        for (long long t = 0; t < M; ++t) {
            seq.exps[static_cast<std::size_t>(s * M + t)] =
                static_cast<long long>(static_cast<__int128>(s) * t % M);
        }
    }
    return seq;
}

PhaseSeq chu_sequence(long long M) {
    if (M < 2) raise(errc::non_positive, "Chu sequence requires M >= 2");
    check_length_cap(M, "Chu sequence");
    const long long D = 2 * M;
    const bool even = (M % 2 == 0);
    PhaseSeq seq;
    seq.D = D;
    seq.exps.resize(static_cast<std::size_t>(M));
    for (long long j = 0; j < M; ++j) {
        __int128 e = static_cast<__int128>(j) * j;
        if (!even) e += j;
        seq.exps[static_cast<std::size_t>(j)] = static_cast<long long>(e % D);
    }
    return seq;
}

PhaseSeq milewski_sequence(long long G, long long H) {
    if (G < 2 || H < 1) raise(errc::non_positive, "Milewski sequence requires G >= 2, H >= 1");
    const long long N = checked_power(G, 2 * H + 1);
    check_length_cap(N, "Milewski sequence");
    const long long L = checked_power(G, H);      // block length
    const long long M = L * G;                    // G^(H+1)
    const bool g_even = (G % 2 == 0);
    PhaseSeq seq;
    seq.D = 2 * M;
    seq.exps.resize(static_cast<std::size_t>(N));
    for (long long j = 0; j < N; ++j) {
        const long long s = j / L;
        const long long t = j % L;
        // Exponent over ζ_M from the closed form, then doubled onto ζ_2M.
        long long e = mulm(s, t, M);
        if (g_even) {
            e = addm(e, mulm(mulm(L / 2, s, M), s, M), M);
        } else {
            // s(s+1)/2 mod M is determined by s mod 2M.
            const long long s2 = s % (2 * M);
            const long long tri =
                static_cast<long long>(static_cast<__int128>(s2) * (s2 + 1) / 2 % M);
            e = addm(e, mulm(L, tri, M), M);
        }
        seq.exps[static_cast<std::size_t>(j)] = 2 * e;
    }
    return seq;
}

PhaseSeq double_modulus(const PhaseSeq& seq) {
    PhaseSeq out;
    out.D = 2 * seq.D;
    out.exps.reserve(seq.exps.size());
    for (long long e : seq.exps) out.exps.push_back(2 * e);
    return out;
}

std::vector<std::complex<double>> as_complex(const PhaseSeq& seq) {
    std::vector<std::complex<double>> out;
    out.reserve(seq.exps.size());
    const double step = 2.0 * std::numbers::pi / static_cast<double>(seq.D);
    for (long long e : seq.exps) {
        out.push_back(std::polar(1.0, step * static_cast<double>(e)));
    }
    return out;
}

} // namespace polyseq
