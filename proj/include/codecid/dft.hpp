#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "codecid/error.hpp"

namespace codecid {

using Complex = std::complex<double>;

namespace detail {

constexpr double kTwoPi = 6.283185307179586476925286766559;

inline bool is_pow2(size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

inline size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 transform, no normalization.
inline void fft_radix2(std::vector<Complex>& a, bool inverse) {
    const size_t n = a.size();
    if (n < 2) return;

    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
        const Complex wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Chirp-z (Bluestein) transform for arbitrary lengths.
inline std::vector<Complex> fft_bluestein(const std::vector<Complex>& x, bool inverse) {
    const size_t n = x.size();
    const double sign = inverse ? 1.0 : -1.0;

    std::vector<Complex> chirp(n);
    for (size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the phase argument small and exact.
        const uint64_t k2 = (static_cast<uint64_t>(k) * k) % (2 * n);
        const double ang = sign * kTwoPi * static_cast<double>(k2) / (2.0 * static_cast<double>(n));
        chirp[k] = Complex(std::cos(ang), std::sin(ang));
    }

    const size_t m = next_pow2(2 * n - 1);
    std::vector<Complex> a(m, Complex(0.0, 0.0));
    std::vector<Complex> b(m, Complex(0.0, 0.0));
    for (size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    for (size_t k = 0; k < n; ++k) {
        b[k] = std::conj(chirp[k]);
        if (k != 0) b[m - k] = std::conj(chirp[k]);
    }

    fft_radix2(a, false);
    fft_radix2(b, false);
    for (size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_radix2(a, true);

    std::vector<Complex> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
    return out;
}

inline std::vector<Complex> transform(std::vector<Complex> x, bool inverse) {
    if (x.empty()) fail("dft: empty input");
    if (is_pow2(x.size())) {
        fft_radix2(x, inverse);
    } else {
        x = fft_bluestein(x, inverse);
    }
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(x.size());
        for (auto& v : x) v *= scale;
    }
    return x;
}

} // namespace detail

// X[k] = sum_n x[n] e^{-2*pi*i*k*n/N}
inline std::vector<Complex> dft(std::vector<Complex> x) {
    return detail::transform(std::move(x), false);
}

// x[n] = (1/N) sum_k X[k] e^{+2*pi*i*k*n/N}
inline std::vector<Complex> dft_inverse(std::vector<Complex> x) {
    return detail::transform(std::move(x), true);
}

inline std::vector<Complex> dft_real(std::span<const double> x) {
    std::vector<Complex> buf(x.size());
    for (size_t i = 0; i < x.size(); ++i) buf[i] = Complex(x[i], 0.0);
    return dft(std::move(buf));
}

inline std::vector<double> magnitude_spectrum(std::span<const double> x) {
    const auto spec = dft_real(x);
    std::vector<double> mag(spec.size());
    for (size_t i = 0; i < spec.size(); ++i) mag[i] = std::abs(spec[i]);
    return mag;
}

} // namespace codecid
