#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "kl/errors.hpp"

namespace kl {

namespace dft {

using cvec = std::vector<std::complex<double>>;

// in-place radix-2 Cooley-Tukey, n a power of two; sign -1 forward, +1 inverse
// (inverse is unnormalized)
inline void fft_pow2(cvec& a, int sign) {
    std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                auto u = a[i + j];
                auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// X[t] = sum_j x[j] exp(-2 pi i j t / m), any m, via Bluestein's chirp-z
// rewrite of jt as (j^2 + t^2 - (t-j)^2)/2; the j^2 terms are reduced mod 2m
// before hitting floating point so large m stays accurate.
inline cvec forward(const cvec& x) {
    std::size_t m = x.size();
    if (m == 0) return {};
    if (m == 1) return x;
    cvec chirp(m);  // chirp[j] = exp(-pi i j^2 / m)
    for (std::size_t j = 0; j < m; ++j) {
        unsigned long long r = (unsigned long long)(j % (2 * m)) * (j % (2 * m)) % (2 * m);
        double ang = -std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
        chirp[j] = {std::cos(ang), std::sin(ang)};
    }
    std::size_t n = 1;
    while (n < 2 * m - 1) n <<= 1;
    cvec a(n, {0.0, 0.0}), b(n, {0.0, 0.0});
    for (std::size_t j = 0; j < m; ++j) a[j] = x[j] * chirp[j];
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < m; ++j) {
        b[j] = std::conj(chirp[j]);
        b[n - j] = b[j];
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    cvec out(m);
    double scale = 1.0 / static_cast<double>(n);
    for (std::size_t t = 0; t < m; ++t) out[t] = a[t] * scale * chirp[t];
    return out;
}

inline cvec inverse(const cvec& x) {
    std::size_t m = x.size();
    cvec conj_in(m);
    for (std::size_t i = 0; i < m; ++i) conj_in[i] = std::conj(x[i]);
    cvec y = forward(conj_in);
    double scale = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = std::conj(y[i]) * scale;
    return y;
}

// quadratic-time reference transform, kept as an independent oracle
inline cvec forward_naive(const cvec& x) {
    std::size_t m = x.size();
    cvec out(m, {0.0, 0.0});
    for (std::size_t t = 0; t < m; ++t) {
        std::complex<double> s{0.0, 0.0};
        for (std::size_t j = 0; j < m; ++j) {
            unsigned long long r = (unsigned long long)j * t % m;
            double ang = -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
            s += x[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[t] = s;
    }
    return out;
}

// cyclic convolution over Z/m of several equal-length factor vectors
inline cvec cyclic_convolution(const std::vector<cvec>& factors) {
    if (factors.empty()) throw Error("cyclic_convolution: no factors");
    std::size_t m = factors.front().size();
    cvec acc = forward(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
        if (factors[i].size() != m) throw Error("cyclic_convolution: length mismatch");
        cvec f = forward(factors[i]);
        for (std::size_t t = 0; t < m; ++t) acc[t] *= f[t];
    }
    return inverse(acc);
}

}  // namespace dft

}  // namespace kl
