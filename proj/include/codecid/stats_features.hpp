#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codecid/dft.hpp"
#include "codecid/error.hpp"

namespace codecid {

inline double mean(std::span<const double> x) {
    require(!x.empty(), "mean: empty series");
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc / static_cast<double>(x.size());
}

// k-th central moment with the 1/N convention: (1/N) sum (x_i - mu)^k.
inline double central_moment(std::span<const double> x, int k) {
    require(k >= 2 && k <= 4, "central_moment: k must be 2, 3 or 4");
    require(x.size() >= 2, "central_moment: need at least 2 samples");
    const double mu = mean(x);
    double acc = 0.0;
    for (double v : x) {
        const double d = v - mu;
        double p = d * d;
        if (k >= 3) p *= d;
        if (k == 4) p *= d;
        acc += p;
    }
    return acc / static_cast<double>(x.size());
}

// Raw product estimator R(k) = 1/(N-|k|) sum s(i+k)s(i): no mean removal,
// no variance normalization.
inline double autocorr(std::span<const double> x, int64_t lag) {
    const size_t n = x.size();
    const uint64_t k = static_cast<uint64_t>(lag < 0 ? -lag : lag);
    require(n >= 1 && k <= n - 1, "autocorr: |lag| must be < series length");
    const size_t m = n - static_cast<size_t>(k);
    double acc = 0.0;
    for (size_t i = 0; i < m; ++i) acc += x[i + k] * x[i];
    return acc / static_cast<double>(m);
}

// Shannon entropy (natural log) of the empirical histogram of distinct values.
inline double entropy(std::span<const double> x) {
    require(!x.empty(), "entropy: empty series");
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double h = 0.0;
    size_t i = 0;
    while (i < sorted.size()) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double p = static_cast<double>(j - i) / n;
        h -= p * std::log(p);
        i = j;
    }
    return h < 0.0 ? 0.0 : h;
}

struct SubbandFeatures {
    std::array<double, 4> mean;
    std::array<double, 4> variance;
    std::array<double, 4> skewness;
};

// Magnitude spectrum split into four near-equal sub-bands over the positive
// frequencies (DC excluded, Nyquist included); per band: mean, variance and
// plain central-moment skewness of the magnitudes.
inline SubbandFeatures subband_features(std::span<const double> x) {
    require(x.size() >= 8, "subband_features: need at least 8 samples");
    const auto mag = magnitude_spectrum(x);
    const size_t nyquist = x.size() / 2;
    std::span<const double> bins(mag.data() + 1, nyquist); // bins 1..nyquist

    SubbandFeatures out{};
    const size_t base = bins.size() / 4;
    const size_t rem = bins.size() % 4;
    size_t pos = 0;
    for (size_t b = 0; b < 4; ++b) {
        const size_t w = base + (b < rem ? 1 : 0);
        std::span<const double> band = bins.subspan(pos, w);
        pos += w;
        out.mean[b] = mean(band);
        if (w >= 2) {
            out.variance[b] = central_moment(band, 2);
            out.skewness[b] = central_moment(band, 3);
        } else {
            out.variance[b] = 0.0;
            out.skewness[b] = 0.0;
        }
    }
    return out;
}

struct BicoherenceParams {
    size_t seg_len = 128; // power of two
    size_t n_seg = 0;     // 0 = as many full segments as fit
};

// Squared bicoherence surface on the principal domain
// {0 <= f2 <= f1, f1 + f2 <= seg_len/2}, estimated by segment averaging.
struct BicoherenceSurface {
    size_t nyquist = 0;
    std::vector<double> b2; // row f1, col f2 <= f1; dense lower triangle

    double at(size_t f1, size_t f2) const {
        require(f2 <= f1 && f1 <= nyquist, "bicoherence surface: index out of domain");
        return b2[f1 * (f1 + 1) / 2 + f2];
    }
};

inline BicoherenceSurface bicoherence_surface(std::span<const double> x,
                                              const BicoherenceParams& params = {}) {
    const size_t seg_len = params.seg_len;
    require(detail::is_pow2(seg_len), "bicoherence: seg_len must be a power of two");
    size_t n_seg = params.n_seg;
    if (n_seg == 0) n_seg = x.size() / seg_len;
    require(n_seg >= 1 && x.size() >= seg_len * n_seg,
            "bicoherence: series shorter than seg_len * n_seg");

    const size_t nyq = seg_len / 2;
    const size_t tri = (nyq + 1) * (nyq + 2) / 2;
    std::vector<Complex> triple(tri, Complex(0.0, 0.0));
    std::vector<double> pair_pow(tri, 0.0);              // E[|X(f1)X(f2)|^2]
    std::vector<double> sum_pow(nyq + 1, 0.0);           // E[|X(f1+f2)|^2]

    std::vector<Complex> seg(seg_len);
    for (size_t s = 0; s < n_seg; ++s) {
        for (size_t i = 0; i < seg_len; ++i) seg[i] = Complex(x[s * seg_len + i], 0.0);
        auto spec = dft(seg);
        for (size_t f = 0; f <= nyq; ++f) sum_pow[f] += std::norm(spec[f]);
        for (size_t f1 = 0; f1 <= nyq; ++f1) {
            for (size_t f2 = 0; f2 <= f1 && f1 + f2 <= nyq; ++f2) {
                const size_t idx = f1 * (f1 + 1) / 2 + f2;
                const Complex prod = spec[f1] * spec[f2];
                triple[idx] += prod * std::conj(spec[f1 + f2]);
                pair_pow[idx] += std::norm(prod);
            }
        }
    }

    BicoherenceSurface out;
    out.nyquist = nyq;
    out.b2.assign((nyq + 1) * (nyq + 2) / 2, 0.0);
    const double inv = 1.0 / static_cast<double>(n_seg);
    for (size_t f1 = 0; f1 <= nyq; ++f1) {
        for (size_t f2 = 0; f2 <= f1 && f1 + f2 <= nyq; ++f2) {
            const size_t idx = f1 * (f1 + 1) / 2 + f2;
            const double denom = (pair_pow[idx] * inv) * (sum_pow[f1 + f2] * inv);
            if (denom > 0.0) {
                out.b2[idx] = std::norm(triple[idx] * inv) / denom;
            }
        }
    }
    return out;
}

// Scalar BC feature: mean of b(f1,f2) over the principal domain.
inline double bicoherence(std::span<const double> x, const BicoherenceParams& params = {}) {
    const auto surface = bicoherence_surface(x, params);
    const size_t nyq = surface.nyquist;
    double acc = 0.0;
    size_t count = 0;
    for (size_t f1 = 0; f1 <= nyq; ++f1) {
        for (size_t f2 = 0; f2 <= f1 && f1 + f2 <= nyq; ++f2) {
            acc += std::sqrt(surface.at(f1, f2));
            ++count;
        }
    }
    return acc / static_cast<double>(count);
}

constexpr size_t kAutocorrLags = 21;

struct StatFeatures {
    double mu = 0.0;
    double var = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    double entropy_h = 0.0;
    std::array<double, kAutocorrLags> ac{}; // lags 1..21
    double bc = 0.0;
    SubbandFeatures subbands{};

    static std::vector<std::string> names() {
        std::vector<std::string> out = {"mu", "var", "mu3", "mu4", "H"};
        for (size_t k = 1; k <= kAutocorrLags; ++k) out.push_back("ac" + std::to_string(k));
        out.push_back("bc");
        for (const char* stem : {"mu_f", "var_f", "mu3_f"})
            for (int b = 1; b <= 4; ++b) out.push_back(stem + std::to_string(b));
        return out;
    }

    std::vector<double> flatten() const {
        std::vector<double> out = {mu, var, mu3, mu4, entropy_h};
        out.insert(out.end(), ac.begin(), ac.end());
        out.push_back(bc);
        out.insert(out.end(), subbands.mean.begin(), subbands.mean.end());
        out.insert(out.end(), subbands.variance.begin(), subbands.variance.end());
        out.insert(out.end(), subbands.skewness.begin(), subbands.skewness.end());
        return out;
    }
};

inline StatFeatures compute_stat_features(std::span<const double> x,
                                          const BicoherenceParams& bico = {}) {
    require(x.size() > kAutocorrLags,
            "stat features: series must be longer than " + std::to_string(kAutocorrLags));
    StatFeatures f;
    f.mu = mean(x);
    f.var = central_moment(x, 2);
    f.mu3 = central_moment(x, 3);
    f.mu4 = central_moment(x, 4);
    f.entropy_h = entropy(x);
    for (size_t k = 1; k <= kAutocorrLags; ++k) f.ac[k - 1] = autocorr(x, static_cast<int64_t>(k));
    f.bc = bicoherence(x, bico);
    f.subbands = subband_features(x);
    return f;
}

} // namespace codecid
