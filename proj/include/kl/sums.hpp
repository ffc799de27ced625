#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "kl/characters.hpp"
#include "kl/dft.hpp"
#include "kl/field.hpp"
#include "kl/parallel.hpp"

namespace kl {

// Parameters of a generalized n-variable Kloosterman sum
//   Kl(a) = (-1)^{n-1} sum_{x_1...x_n = a} prod_i chi_i(x_i) * psi(sum_i c_i x_i)
// with all linear-form coefficients c_i nonzero.
struct KloostermanSpec {
    int n = 2;
    Field field;
    std::vector<FieldElement> coeffs;       // size n, all nonzero
    std::vector<long long> char_exponents;  // size n, exponents mod q-1

    static KloostermanSpec make(const Field& f, int n, std::vector<FieldElement> coeffs = {},
                                std::vector<long long> chi = {}) {
        if (n < 1) throw Error("n must be >= 1");
        KloostermanSpec s;
        s.n = n;
        s.field = f;
        if (coeffs.empty()) coeffs.assign(static_cast<std::size_t>(n), f.one());
        if (chi.empty()) chi.assign(static_cast<std::size_t>(n), 0);
        if (static_cast<int>(coeffs.size()) != n || static_cast<int>(chi.size()) != n)
            throw Error("coeffs/chi must have n entries");
        for (auto c : coeffs)
            if (c.is_zero()) throw Error("linear-form coefficients must be nonzero");
        long long m = f.q() - 1;
        for (auto& e : chi) e = ((e % m) + m) % m;
        s.coeffs = std::move(coeffs);
        s.char_exponents = std::move(chi);
        return s;
    }

    bool trivial_chi() const {
        for (auto e : char_exponents)
            if (e) return false;
        return true;
    }

    // factor function f_i over F_q^x indexed by discrete log:
    // f_i(g^j) = chi_i(g^j) * psi(c_i g^j)
    dft::cvec factor_table(int i) const {
        const long long m = field.q() - 1;
        AdditiveCharacter psi(field);
        MultiplicativeCharacter chi(field, char_exponents[static_cast<std::size_t>(i)]);
        dft::cvec f(static_cast<std::size_t>(m));
        for (long long j = 0; j < m; ++j) {
            FieldElement x{static_cast<std::int32_t>(j)};
            f[static_cast<std::size_t>(j)] = chi(x) * psi(field.mul(coeffs[static_cast<std::size_t>(i)], x));
        }
        return f;
    }
};

// The full table a -> Kl(a), indexed by the discrete log of a. Raw values are
// kept; `normalized` marks division by q^{(n-1)/2} (weight-zero scaling).
struct SumTable {
    KloostermanSpec spec;
    std::vector<std::complex<double>> values;  // index = log a
    bool normalized = false;

    double weight_scale() const {
        return std::pow(static_cast<double>(spec.field.q()), (spec.n - 1) / 2.0);
    }

    std::complex<double> at(FieldElement a) const {
        if (a.is_zero()) throw ZeroArgument("Kloosterman table is indexed by F_q^x");
        return values[static_cast<std::size_t>(a.log)];
    }

    SumTable normalized_copy() const {
        if (normalized) return *this;
        SumTable t = *this;
        double s = 1.0 / weight_scale();
        for (auto& v : t.values) v *= s;
        t.normalized = true;
        return t;
    }
};

// Direct O(q^{n-1}) evaluation at a single point: iterate x_1..x_{n-1} freely
// and solve for x_n.
inline std::complex<double> kloosterman(const KloostermanSpec& spec, FieldElement a) {
    if (a.is_zero()) throw ZeroArgument("Kloosterman sum requires a != 0");
    const Field& F = spec.field;
    const long long m = F.q() - 1;
    const int n = spec.n;
    std::vector<dft::cvec> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = spec.factor_table(i);
    std::complex<double> total{0.0, 0.0};
    std::vector<long long> j(static_cast<std::size_t>(n - 1), 0);
    std::vector<std::complex<double>> prefix(static_cast<std::size_t>(n), {1.0, 0.0});
    std::vector<long long> logsum(static_cast<std::size_t>(n), 0);
    if (n == 1) return f[0][static_cast<std::size_t>(a.log)];
    for (;;) {
        for (int i = 0; i < n - 1; ++i) {
            prefix[static_cast<std::size_t>(i + 1)] =
                prefix[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j[static_cast<std::size_t>(i)])];
            logsum[static_cast<std::size_t>(i + 1)] = logsum[static_cast<std::size_t>(i)] + j[static_cast<std::size_t>(i)];
        }
        long long jn = ((a.log - logsum[static_cast<std::size_t>(n - 1)]) % m + m) % m;
        total += prefix[static_cast<std::size_t>(n - 1)] * f[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(jn)];
        int t = n - 2;
        while (t >= 0 && ++j[static_cast<std::size_t>(t)] == m) {
            j[static_cast<std::size_t>(t)] = 0;
            --t;
        }
        if (t < 0) break;
    }
    if ((n - 1) % 2) total = -total;
    return total;
}

namespace detail_sums {

// one pass over (F_q^x)^n in lexicographic discrete-log order; rows of the
// outer index are grouped into fixed-size chunks so parallel runs reduce in
// a thread-count-independent order
inline void naive_fill(const KloostermanSpec& spec, const std::vector<dft::cvec>& f,
                       std::vector<std::complex<double>>& out, const Parallel& pool) {
    const long long m = spec.field.q() - 1;
    const int n = spec.n;
    out.assign(static_cast<std::size_t>(m), {0.0, 0.0});
    if (n == 1) {
        for (long long j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = f[0][static_cast<std::size_t>(j)];
        return;
    }
    constexpr long long kChunk = 8;  // outer logs per chunk, fixed for determinism
    const std::size_t n_chunks = static_cast<std::size_t>((m + kChunk - 1) / kChunk);

    auto run_chunk = [&](std::size_t chunk, std::vector<std::complex<double>>& bucket) {
        bucket.assign(static_cast<std::size_t>(m), {0.0, 0.0});
        long long lo = static_cast<long long>(chunk) * kChunk;
        long long hi = std::min<long long>(lo + kChunk, m);
        std::vector<long long> j(static_cast<std::size_t>(n - 1), 0);
        for (long long j0 = lo; j0 < hi; ++j0) {
            j.assign(static_cast<std::size_t>(n - 1), 0);
            j[0] = j0;
            std::vector<std::complex<double>> prefix(static_cast<std::size_t>(n), {1.0, 0.0});
            std::vector<long long> logsum(static_cast<std::size_t>(n), 0);
            for (;;) {
                for (int i = 0; i < n - 1; ++i) {
                    prefix[static_cast<std::size_t>(i + 1)] =
                        prefix[static_cast<std::size_t>(i)] *
                        f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j[static_cast<std::size_t>(i)])];
                    logsum[static_cast<std::size_t>(i + 1)] =
                        (logsum[static_cast<std::size_t>(i)] + j[static_cast<std::size_t>(i)]) % m;
                }
                const std::complex<double> pre = prefix[static_cast<std::size_t>(n - 1)];
                const long long base = logsum[static_cast<std::size_t>(n - 1)];
                const auto& fn = f[static_cast<std::size_t>(n - 1)];
                // split the inner loop at the wrap point to avoid a modulo per term
                long long first = m - base;  // j_n < first lands at base + j_n
                for (long long jn = 0; jn < first; ++jn)
                    bucket[static_cast<std::size_t>(base + jn)] += pre * fn[static_cast<std::size_t>(jn)];
                for (long long jn = first; jn < m; ++jn)
                    bucket[static_cast<std::size_t>(base + jn - m)] += pre * fn[static_cast<std::size_t>(jn)];
                // odometer over j_2..j_{n-1} (j_1 pinned to this chunk)
                int t = n - 2;
                while (t >= 1 && ++j[static_cast<std::size_t>(t)] == m) {
                    j[static_cast<std::size_t>(t)] = 0;
                    --t;
                }
                if (t < 1) break;
            }
        }
    };

    // waves of `threads` chunks; combine strictly in chunk order
    const std::size_t width = static_cast<std::size_t>(std::max(1, pool.threads()));
    std::vector<std::vector<std::complex<double>>> buckets(std::min(width, n_chunks));
    for (std::size_t wave = 0; wave < n_chunks; wave += buckets.size()) {
        std::size_t count = std::min(buckets.size(), n_chunks - wave);
        pool.for_chunks(count, [&](std::size_t t) { run_chunk(wave + t, buckets[t]); });
        for (std::size_t t = 0; t < count; ++t)
            for (long long i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] += buckets[t][static_cast<std::size_t>(i)];
    }
}

}  // namespace detail_sums

// Full table by brute force; deterministic summation order, bit-identical
// across runs and thread counts.
inline SumTable table_naive(const KloostermanSpec& spec, const Parallel& pool = Parallel(1),
                            long long budget = 1000000000) {
    double cost = std::pow(static_cast<double>(spec.field.q()), spec.n);
    if (cost > static_cast<double>(budget))
        throw BudgetExceeded("q^n exceeds the naive-table budget of " + std::to_string(budget));
    std::vector<dft::cvec> f(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) f[static_cast<std::size_t>(i)] = spec.factor_table(i);
    SumTable t;
    t.spec = spec;
    detail_sums::naive_fill(spec, f, t.values, pool);
    if ((spec.n - 1) % 2)
        for (auto& v : t.values) v = -v;
    return t;
}

// Full table as the n-fold multiplicative convolution of the factor
// functions over the cyclic group F_q^x, via length-(q-1) transforms.
inline SumTable table_convolution(const KloostermanSpec& spec) {
    std::vector<dft::cvec> f(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) f[static_cast<std::size_t>(i)] = spec.factor_table(i);
    SumTable t;
    t.spec = spec;
    t.values = dft::cyclic_convolution(f);
    if ((spec.n - 1) % 2)
        for (auto& v : t.values) v = -v;
    return t;
}

struct WeilReport {
    double max_ratio = 0.0;
    bool pass = false;
    long long argmax_log = 0;
};

// max_a |Kl(a)| / q^{(n-1)/2} against the purity bound n
inline WeilReport weil_report(const SumTable& table) {
    WeilReport r;
    double scale = table.normalized ? 1.0 : 1.0 / table.weight_scale();
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        double v = std::abs(table.values[i]) * scale;
        if (v > r.max_ratio) {
            r.max_ratio = v;
            r.argmax_log = static_cast<long long>(i);
        }
    }
    r.pass = r.max_ratio <= static_cast<double>(table.spec.n) + 1e-6;
    return r;
}

// theta(a) in [0, pi] with 2 cos(theta) = normalized Kl_2(a); the table must
// be real (n = 2, trivial chi)
inline double angle(const SumTable& table2, FieldElement a) {
    if (table2.spec.n != 2) throw Error("angles are defined for n = 2 tables");
    if (!table2.normalized) throw Error("angle requires a normalized table");
    std::complex<double> v = table2.at(a);
    if (std::abs(v.imag()) > 1e-8) throw NotReal("table value has nonzero imaginary part");
    double c = v.real() / 2.0;
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

// conj(Kl_n(a)) == Kl_n((-1)^n a), the x -> -x substitution symmetry
inline bool conj_symmetry_check(const SumTable& table) {
    if (!table.spec.trivial_chi()) throw Error("conjugation symmetry check requires trivial chi");
    const Field& F = table.spec.field;
    double tol = 1e-9 * (table.normalized ? 1.0 : table.weight_scale());
    FieldElement sign = F.one();
    if (table.spec.n % 2) sign = F.neg(sign);
    for (long long j = 0; j < F.q() - 1; ++j) {
        FieldElement a{static_cast<std::int32_t>(j)};
        std::complex<double> lhs = std::conj(table.at(a));
        std::complex<double> rhs = table.at(F.mul(sign, a));
        if (std::abs(lhs - rhs) > tol) return false;
    }
    return true;
}

// Kl_{c,chi}(a) == (prod chi_i(c_i))^{-1} * Kl_{1,chi}(a * prod c_i)
inline bool coeff_covariance_check(const KloostermanSpec& spec, FieldElement a) {
    const Field& F = spec.field;
    KloostermanSpec unit = KloostermanSpec::make(F, spec.n, std::vector<FieldElement>(static_cast<std::size_t>(spec.n), F.one()),
                                                 spec.char_exponents);
    FieldElement prod = F.one();
    std::complex<double> chi_c{1.0, 0.0};
    for (int i = 0; i < spec.n; ++i) {
        prod = F.mul(prod, spec.coeffs[static_cast<std::size_t>(i)]);
        MultiplicativeCharacter chi(F, spec.char_exponents[static_cast<std::size_t>(i)]);
        chi_c *= chi(spec.coeffs[static_cast<std::size_t>(i)]);
    }
    std::complex<double> lhs = kloosterman(spec, a);
    std::complex<double> rhs = kloosterman(unit, F.mul(a, prod)) / chi_c;
    double tol = 1e-9 * std::pow(static_cast<double>(F.q()), (spec.n - 1) / 2.0);
    return std::abs(lhs - rhs) <= tol;
}

}  // namespace kl
