#include "polyseq/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polyseq {

const std::complex<double>& CorrProfile::at(long long k) const {
    if (k < 0 || k >= static_cast<long long>(length)) {
        raise(errc::out_of_range, "shift " + std::to_string(k) + " outside [0, " +
                                      std::to_string(length) + ")");
    }
    return values[static_cast<std::size_t>(k)];
}

namespace {

using cd = std::complex<double>;

std::vector<cd> unit_roots(long long D) {
    std::vector<cd> roots(static_cast<std::size_t>(D));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(D);
    for (std::size_t e = 0; e < roots.size(); ++e) {
        roots[e] = std::polar(1.0, step * static_cast<double>(e));
    }
    return roots;
}

// Iterative radix-2 transform with a precomputed twiddle table.
void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cd> tw(n / 2);
    const double sgn = inverse ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n / 2; ++j) {
        tw[j] = std::polar(1.0, sgn * 2.0 * std::numbers::pi * static_cast<double>(j) /
                                    static_cast<double>(n));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t h = 0; h < len / 2; ++h) {
                const cd w = tw[h * stride];
                const cd u = a[i + h];
                const cd v = a[i + h + len / 2] * w;
                a[i + h] = u + v;
                a[i + h + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        for (auto& x : a) x /= static_cast<double>(n);
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Correlation lags of the zero-padded sequence: r[l] = sum_j conj(a_j) a_{j+l mod P}.
std::vector<cd> padded_correlation(const std::vector<cd>& x, std::size_t P) {
    std::vector<cd> a(P, cd{0.0, 0.0});
    std::copy(x.begin(), x.end(), a.begin());
    fft_pow2(a, false);
    for (auto& v : a) v = cd{std::norm(v), 0.0};
    fft_pow2(a, true);
    return a;
}

long long reduced_diff(long long hi, long long lo, long long D) {
    long long e = hi - lo;
    return e < 0 ? e + D : e;
}

} // namespace

CorrProfile acyclic_autocorr(const PhaseSeq& seq, bool with_exact) {
    const std::size_t N = seq.size();
    const long long D = seq.D;
    const auto roots = unit_roots(D);

    CorrProfile profile;
    profile.kind = CorrKind::acyclic;
    profile.length = N;
    profile.values.resize(N);
    if (with_exact) profile.exact.emplace();

    for (std::size_t k = 0; k < N; ++k) {
        if (with_exact) {
            RootSum rs(D);
            for (std::size_t j = 0; j + k < N; ++j) {
                rs.add_root(reduced_diff(seq.exps[j + k], seq.exps[j], D));
            }
            profile.values[k] = rs.to_complex();
            profile.exact->push_back(std::move(rs));
        } else {
            cd acc{0.0, 0.0};
            for (std::size_t j = 0; j + k < N; ++j) {
                acc += roots[static_cast<std::size_t>(
                    reduced_diff(seq.exps[j + k], seq.exps[j], D))];
            }
            profile.values[k] = acc;
        }
    }
    return profile;
}

CorrProfile cyclic_autocorr(const PhaseSeq& seq, bool with_exact) {
    const std::size_t N = seq.size();
    const long long D = seq.D;
    const auto roots = unit_roots(D);

    CorrProfile profile;
    profile.kind = CorrKind::cyclic;
    profile.length = N;
    profile.values.resize(N);
    if (with_exact) profile.exact.emplace();

    for (std::size_t k = 0; k < N; ++k) {
        if (with_exact) {
            RootSum rs(D);
            for (std::size_t j = 0; j + k < N; ++j) {
                rs.add_root(reduced_diff(seq.exps[j + k], seq.exps[j], D));
            }
            for (std::size_t j = N - k; j < N; ++j) {
                rs.add_root(reduced_diff(seq.exps[j + k - N], seq.exps[j], D));
            }
            profile.values[k] = rs.to_complex();
            profile.exact->push_back(std::move(rs));
        } else {
            cd acc{0.0, 0.0};
            for (std::size_t j = 0; j + k < N; ++j) {
                acc += roots[static_cast<std::size_t>(
                    reduced_diff(seq.exps[j + k], seq.exps[j], D))];
            }
            for (std::size_t j = N - k; j < N; ++j) {
                acc += roots[static_cast<std::size_t>(
                    reduced_diff(seq.exps[j + k - N], seq.exps[j], D))];
            }
            profile.values[k] = acc;
        }
    }
    return profile;
}

CorrProfile cyclic_autocorr_fast(const PhaseSeq& seq) {
    const std::size_t N = seq.size();
    CorrProfile profile;
    profile.kind = CorrKind::cyclic;
    profile.length = N;
    profile.values.resize(N);
    if (N == 0) return profile;

    const auto x = as_complex(seq);
    if ((N & (N - 1)) == 0) {
        // Transform-friendly length: the circular correlation directly.
        auto r = padded_correlation(x, N);
        std::copy(r.begin(), r.end(), profile.values.begin());
    } else {
        // Pad to a power of two and reassemble the circular profile from
        // the linear correlation lags: gamma_k = alpha_k + conj(alpha_{N-k}).
        const std::size_t P = next_pow2(2 * N);
        auto r = padded_correlation(x, P);
        profile.values[0] = r[0];
        for (std::size_t k = 1; k < N; ++k) {
            profile.values[k] = r[k] + r[P - (N - k)];
        }
    }
    return profile;
}

CorrProfile acyclic_autocorr_fast(const PhaseSeq& seq) {
    const std::size_t N = seq.size();
    CorrProfile profile;
    profile.kind = CorrKind::acyclic;
    profile.length = N;
    profile.values.resize(N);
    if (N == 0) return profile;

    const std::size_t P = next_pow2(2 * N);
    auto r = padded_correlation(as_complex(seq), P);
    std::copy(r.begin(), r.begin() + static_cast<long>(N), profile.values.begin());
    return profile;
}

WraparoundReport check_wraparound_identity(const PhaseSeq& seq) {
    const std::size_t N = seq.size();
    const auto alpha = acyclic_autocorr(seq, true);
    const auto gamma = cyclic_autocorr(seq, true);
    const double tol = 1e-10 * static_cast<double>(N);

    WraparoundReport report;
    for (std::size_t k = 1; k < N; ++k) {
        ++report.checked_shifts;
        RootSum combined = (*alpha.exact)[k];
        combined += (*alpha.exact)[N - k].conjugate();
        const cd lhs = gamma.values[k];
        const cd rhs = alpha.values[k] + std::conj(alpha.values[N - k]);
        if (!(combined == (*gamma.exact)[k])) {
            report.violations.push_back(
                {static_cast<long long>(k), "exact root-sum identity", lhs, rhs});
            continue;
        }
        if (std::abs(lhs - rhs) > tol) {
            report.violations.push_back(
                {static_cast<long long>(k), "float identity", lhs, rhs});
            continue;
        }
        if (rootsum_is_zero((*gamma.exact)[k])) {
            const double ak = std::abs(alpha.values[k]);
            const double ank = std::abs(alpha.values[N - k]);
            if (std::abs(ak - ank) > tol) {
                report.violations.push_back({static_cast<long long>(k),
                                             "|alpha_k| == |alpha_{N-k}| at zero gamma",
                                             cd{ak, 0.0}, cd{ank, 0.0}});
            }
        }
    }
    return report;
}

} // namespace polyseq
