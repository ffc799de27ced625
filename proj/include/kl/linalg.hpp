#pragma once

#include <vector>

#include "kl/errors.hpp"

namespace kl {

using IntMat = std::vector<std::vector<long long>>;

// Bareiss fraction-free determinant; entries stay integral throughout.
// Ranks here are <= 8 with small entries, so __int128 intermediates suffice.
inline long long int_det(const IntMat& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> a(static_cast<std::size_t>(n), std::vector<__int128>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v / prev;
            }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    __int128 det = sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return static_cast<long long>(det);
}

namespace detail_linalg {

// Berkowitz, division-free: step k extends the characteristic polynomial of
// the leading (k-1)-minor by the truncated product with the Toeplitz column
//   c = (1, -m_kk, -R S, -R A S, -R A^2 S, ...)
// where R/S are the border row/column and A the leading block. Add/Mul are
// ring callbacks so the same code runs over Z (via __int128) and F_p.
template <class T, class Add, class Mul>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& m, T zero, T one, Add add, Mul mul) {
    int n = static_cast<int>(m.size());
    std::vector<T> poly{one};  // coefficients, highest degree first
    for (int k = 1; k <= n; ++k) {
        std::vector<T> c(static_cast<std::size_t>(k + 1), zero);
        c[0] = one;
        c[1] = add(zero, mul(m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)], zero - one));
        std::vector<T> v(static_cast<std::size_t>(k - 1));
        for (int i = 0; i < k - 1; ++i) v[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)];
        for (int j = 2; j <= k; ++j) {
            T dot = zero;
            for (int i = 0; i < k - 1; ++i)
                dot = add(dot, mul(m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]));
            c[static_cast<std::size_t>(j)] = mul(dot, zero - one);
            if (j < k) {
                std::vector<T> nv(static_cast<std::size_t>(k - 1), zero);
                for (int i = 0; i < k - 1; ++i) {
                    T s = zero;
                    for (int t = 0; t < k - 1; ++t)
                        s = add(s, mul(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)], v[static_cast<std::size_t>(t)]));
                    nv[static_cast<std::size_t>(i)] = s;
                }
                v = std::move(nv);
            }
        }
        std::vector<T> np(static_cast<std::size_t>(k + 1), zero);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < poly.size(); ++j)
                if (i + j < np.size()) np[i + j] = add(np[i + j], mul(c[i], poly[j]));
        poly = std::move(np);
    }
    return std::vector<T>(poly.rbegin(), poly.rend());  // lowest degree first
}

}  // namespace detail_linalg

// characteristic polynomial of an integer matrix, coefficients of
// det(xI - M) lowest degree first
inline std::vector<long long> charpoly_int(const IntMat& m) {
    std::vector<std::vector<__int128>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    auto out = detail_linalg::berkowitz<__int128>(
        big, __int128(0), __int128(1), [](__int128 a, __int128 b) { return a + b; },
        [](__int128 a, __int128 b) { return a * b; });
    std::vector<long long> r(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) r[i] = static_cast<long long>(out[i]);
    return r;
}

// characteristic polynomial over F_p, computed independently of charpoly_int
inline std::vector<long> charpoly_mod_p(const IntMat& m, long p) {
    std::vector<std::vector<long long>> mp(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        mp[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) mp[i][j] = ((m[i][j] % p) + p) % p;
    }
    auto out = detail_linalg::berkowitz<long long>(
        mp, 0LL, 1LL, [p](long long a, long long b) { return ((a + b) % p + p) % p; },
        [p](long long a, long long b) { return ((a * b) % p + p) % p; });
    std::vector<long> r(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) r[i] = static_cast<long>(((out[i] % p) + p) % p);
    return r;
}

// reduced row echelon nullspace basis over F_p
inline std::vector<std::vector<long>> nullspace_mod_p(std::vector<std::vector<long>> a, long p) {
    if (a.empty()) return {};
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    auto inv = [p](long x) {
        long long t = 1, b = ((x % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) t = t * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<long>(t);
    };
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (((a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] % p) + p) % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(piv)]);
        long iv = inv(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                static_cast<long>((long long)(((a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % p) + p) % p) * iv % p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = ((a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] % p) + p) % p;
            if (!f) continue;
            for (int j = 0; j < cols; ++j) {
                long long v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              (long long)f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long>(((v % p) + p) % p);
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<long>> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<long> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(c)] = 1;
        for (int i = 0; i < r; ++i) {
            long coeff = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
                static_cast<long>(((-(long long)coeff) % p + p) % p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kl
