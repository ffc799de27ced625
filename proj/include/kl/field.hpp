#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "kl/config.hpp"
#include "kl/errors.hpp"

namespace kl {

// An element of F_{p^k} in discrete-log form: log == -1 encodes 0, otherwise
// the element is g^log for the canonical generator g (the residue class of X
// in F_p[X]/modulus). Elements carry no field pointer; mixing elements of
// different fields is the caller's bug.
struct FieldElement {
    std::int32_t log = -1;

    bool is_zero() const { return log < 0; }
    friend bool operator==(FieldElement a, FieldElement b) { return a.log == b.log; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.log != b.log; }
};

namespace detail {

// dense polynomial over F_p, lowest degree first, no trailing zeros
using Poly = std::vector<long>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += (long long)a[i] * b[j] % p;
    }
    // reduce mod monic f
    std::size_t k = f.size() - 1;
    for (std::size_t d = acc.size(); d-- > k;) {
        long long c = acc[d] % p;
        if (!c) continue;
        for (std::size_t j = 0; j < k; ++j) acc[d - k + j] = (acc[d - k + j] - c * f[j]) % p;
        acc[d] = 0;
    }
    Poly r(k, 0);
    for (std::size_t i = 0; i < k && i < acc.size(); ++i) r[i] = static_cast<long>(((acc[i] % p) + p) % p);
    poly_trim(r);
    return r;
}

inline Poly poly_powmod(Poly base, long long e, const Poly& f, long p) {
    Poly r = {1};
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_mod(Poly a, const Poly& f, long p) {
    std::size_t k = f.size() - 1;
    for (std::size_t d = a.size(); d-- > k;) {
        long long c = a[d] % p;
        if (!c) continue;
        for (std::size_t j = 0; j < k; ++j) a[d - k + j] = static_cast<long>((((long long)a[d - k + j] - c * f[j]) % p + p) % p);
        a[d] = 0;
    }
    a.resize(std::min(a.size(), k));
    poly_trim(a);
    return a;
}

inline long inv_mod_prime(long long x, long p) {
    long long t = 1, base = ((x % p) + p) % p, e = p - 2;
    while (e) {
        if (e & 1) t = t * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<long>(t);
}

// remainder of a by b (b nonzero, any leading coefficient)
inline Poly poly_rem(Poly a, const Poly& b, long p) {
    poly_trim(a);
    long lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        long long c = (long long)a.back() * lead_inv % p;
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[off + j] = static_cast<long>((((long long)a[off + j] - c * b[j]) % p + p) % p);
        poly_trim(a);
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, long p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^e} mod f by repeated p-th powering
inline Poly frobenius_power(const Poly& f, long p, int e) {
    Poly x = {0, 1};
    Poly r = poly_mod(x, f, p);
    for (int i = 0; i < e; ++i) r = poly_powmod(r, p, f, p);
    return r;
}

inline bool poly_is_irreducible(const Poly& f, long p, int k) {
    if (k == 1) return true;
    if (f[0] == 0) return false;
    // Rabin: x^{p^k} == x mod f, and gcd(f, x^{p^{k/l}} - x) == 1 for primes l | k
    Poly x = poly_mod(Poly{0, 1}, f, p);
    Poly xq = frobenius_power(f, p, k);
    if (xq != x) return false;
    for (long long l : prime_divisors(k)) {
        Poly xd = frobenius_power(f, p, static_cast<int>(k / l));
        Poly diff = xd;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<long>(((diff[1] - 1) % p + p) % p);
        poly_trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace detail

// F_{p^k} with exp/log tables, the Zech logarithm table for addition, and the
// absolute trace. The modulus is pinned deterministically:
//   k == 1: X - g with g the smallest primitive root mod p;
//   k >= 2: the lexicographically smallest monic irreducible of degree k
//           (coefficients compared lowest degree first) whose root generates
//           the multiplicative group.
// Zech tables are cached on disk as little-endian int32: the k+1 modulus
// coefficients, then Z[0..q-2] with -1 marking 1 + g^j == 0.
class Field {
public:
    static constexpr long long kMaxQ = 1 << 24;

    static Field make(long p, int k) { return make(p, k, default_cache_dir()); }

    // cache_dir == "" disables the on-disk cache
    static Field make(long p, int k, const std::string& cache_dir) {
        if (!detail::is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
        if (k < 1) throw Error("extension degree must be >= 1");
        long long q = 1;
        for (int i = 0; i < k; ++i) {
            q *= p;
            if (q > kMaxQ) throw TableTooLarge("p^k exceeds the 2^24 table guard");
        }
        auto data = std::make_shared<Data>();
        data->p = p;
        data->k = k;
        data->q = q;
        Field f;
        if (!cache_dir.empty() && data->load_cache(cache_dir)) {
            f.data_ = std::move(data);
            return f;
        }
        data->build();
        if (!cache_dir.empty()) data->store_cache(cache_dir);
        f.data_ = std::move(data);
        return f;
    }

    long p() const { return data_->p; }
    int k() const { return data_->k; }
    long long q() const { return data_->q; }
    const std::vector<long>& modulus() const { return data_->modulus; }
    const std::vector<std::int32_t>& zech_table() const { return data_->zech; }

    // discrete log of the canonical generator: g = g^1 by construction
    static constexpr int generator_index = 1;

    FieldElement zero() const { return {-1}; }
    FieldElement one() const { return {0}; }
    FieldElement gen() const { return data_->q == 2 ? one() : FieldElement{1}; }

    // base-p digit encoding of the coefficient vector: sum c_i p^i for the
    // element sum c_i X^i; this is the external integer name of an element
    FieldElement from_index(long long idx) const {
        if (idx < 0 || idx >= data_->q) throw Error("element index out of range");
        return {data_->log_of_index[static_cast<std::size_t>(idx)]};
    }
    long long to_index(FieldElement x) const {
        return x.is_zero() ? 0 : data_->index_of_log[static_cast<std::size_t>(x.log)];
    }

    FieldElement from_log(long long j) const {
        long long m = data_->q - 1;
        return {static_cast<std::int32_t>(((j % m) + m) % m)};
    }

    FieldElement add(FieldElement x, FieldElement y) const {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        long long m = data_->q - 1;
        long long i = x.log, j = y.log;
        if (i > j) std::swap(i, j);
        std::int32_t z = data_->zech[static_cast<std::size_t>(j - i)];
        if (z < 0) return {-1};
        long long s = i + z;
        if (s >= m) s -= m;
        return {static_cast<std::int32_t>(s)};
    }

    FieldElement neg(FieldElement x) const {
        if (x.is_zero() || data_->p == 2) return x;
        long long m = data_->q - 1;
        long long s = x.log + m / 2;
        if (s >= m) s -= m;
        return {static_cast<std::int32_t>(s)};
    }

    FieldElement sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

    FieldElement mul(FieldElement x, FieldElement y) const {
        if (x.is_zero() || y.is_zero()) return {-1};
        long long m = data_->q - 1;
        long long s = (long long)x.log + y.log;
        if (s >= m) s -= m;
        return {static_cast<std::int32_t>(s)};
    }

    FieldElement inv(FieldElement x) const {
        if (x.is_zero()) throw DivisionByZero("inverse of zero");
        long long m = data_->q - 1;
        return {static_cast<std::int32_t>(x.log ? m - x.log : 0)};
    }

    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

    FieldElement pow(FieldElement x, long long e) const {
        long long m = data_->q - 1;
        if (x.is_zero()) {
            if (e < 0) throw DivisionByZero("negative power of zero");
            return e == 0 ? one() : zero();
        }
        long long s = (__int128)x.log * (e % m) % m;
        if (s < 0) s += m;
        return {static_cast<std::int32_t>(s)};
    }

    // absolute trace to F_p, returned as an integer in [0, p)
    long trace(FieldElement x) const {
        if (x.is_zero()) return 0;
        if (data_->k == 1) return static_cast<long>(to_index(x));
        long long m = data_->q - 1;
        FieldElement acc = x;
        long long e = x.log;
        for (int i = 1; i < data_->k; ++i) {
            e = e * data_->p % m;
            acc = add(acc, FieldElement{static_cast<std::int32_t>(e)});
        }
        if (acc.is_zero()) return 0;
        long long idx = to_index(acc);
        if (idx >= data_->p) throw Internal("trace left the prime field");
        return static_cast<long>(idx);
    }

    static std::string cache_file_name(long p, int k) {
        return "field_p" + std::to_string(p) + "_k" + std::to_string(k) + ".tbl";
    }

private:
    struct Data {
        long p = 0;
        int k = 0;
        long long q = 0;
        std::vector<long> modulus;               // k+1 coefficients, lowest first, monic
        std::vector<std::int32_t> zech;          // size q-1
        std::vector<long long> index_of_log;     // size q-1: log -> digit index
        std::vector<std::int32_t> log_of_index;  // size q: digit index -> log (-1 at 0)

        void build() {
            find_modulus_and_tables();
            build_zech();
        }

        // exp/log tables for a candidate modulus; returns false if X fails to
        // generate the multiplicative group
        bool try_tables(const std::vector<long>& f) {
            long long m = q - 1;
            index_of_log.assign(static_cast<std::size_t>(m), 0);
            log_of_index.assign(static_cast<std::size_t>(q), -1);
            std::vector<long> coeff(static_cast<std::size_t>(k), 0);
            coeff[0] = 1;
            for (long long j = 0; j < m; ++j) {
                long long idx = 0;
                for (int i = k - 1; i >= 0; --i) idx = idx * p + coeff[static_cast<std::size_t>(i)];
                if (idx == 0 || (j > 0 && idx == 1)) return false;  // hit zero or cycled early
                if (log_of_index[static_cast<std::size_t>(idx)] != -1) return false;
                index_of_log[static_cast<std::size_t>(j)] = idx;
                log_of_index[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(j);
                // multiply by X
                long carry = coeff[static_cast<std::size_t>(k - 1)];
                for (int i = k - 1; i > 0; --i) coeff[static_cast<std::size_t>(i)] = coeff[static_cast<std::size_t>(i - 1)];
                coeff[0] = 0;
                if (carry) {
                    for (int i = 0; i < k; ++i) {
                        long long c = coeff[static_cast<std::size_t>(i)] - (long long)carry * f[static_cast<std::size_t>(i)];
                        coeff[static_cast<std::size_t>(i)] = static_cast<long>(((c % p) + p) % p);
                    }
                }
            }
            // after m multiplications we must be back at 1
            long long idx = 0;
            for (int i = k - 1; i >= 0; --i) idx = idx * p + coeff[static_cast<std::size_t>(i)];
            return idx == 1;
        }

        void find_modulus_and_tables() {
            if (k == 1) {
                // smallest primitive root
                auto divs = detail::prime_divisors(q - 1);
                for (long g = 1; g < p; ++g) {
                    bool primitive = true;
                    for (long long l : divs) {
                        long long t = 1, base = g, e = (q - 1) / l;
                        while (e) {
                            if (e & 1) t = t * base % p;
                            base = base * base % p;
                            e >>= 1;
                        }
                        if (t == 1) {
                            primitive = false;
                            break;
                        }
                    }
                    if (primitive) {
                        modulus = {((p - g) % p), 1};  // X - g
                        if (!try_tables(modulus)) throw Internal("prime-field table build failed");
                        return;
                    }
                }
                throw Internal("no primitive root found");
            }
            // enumerate (c_0,...,c_{k-1}) in lexicographic order, c_0 most significant
            std::vector<long> c(static_cast<std::size_t>(k), 0);
            auto divs = detail::prime_divisors(q - 1);
            for (;;) {
                if (c[0] != 0) {  // constant term 0 is always reducible
                    std::vector<long> f = c;
                    f.push_back(1);
                    if (detail::poly_is_irreducible(f, p, k)) {
                        // root order check: X^{(q-1)/l} != 1 for primes l | q-1
                        bool generates = true;
                        for (long long l : divs) {
                            detail::Poly r = detail::poly_powmod({0, 1}, (q - 1) / l, f, p);
                            if (r == detail::Poly{1}) {
                                generates = false;
                                break;
                            }
                        }
                        if (generates && try_tables(f)) {
                            modulus = f;
                            return;
                        }
                    }
                }
                // odometer: last coefficient fastest
                int i = k - 1;
                while (i >= 0 && ++c[static_cast<std::size_t>(i)] == p) {
                    c[static_cast<std::size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) throw Internal("no generating irreducible found");
            }
        }

        void build_zech() {
            long long m = q - 1;
            zech.assign(static_cast<std::size_t>(m), -1);
            for (long long j = 0; j < m; ++j) {
                long long idx = index_of_log[static_cast<std::size_t>(j)];
                long c0 = static_cast<long>(idx % p);
                long long idx1 = idx - c0 + (c0 + 1) % p;  // add 1 to the constant digit
                zech[static_cast<std::size_t>(j)] = idx1 == 0 ? -1 : log_of_index[static_cast<std::size_t>(idx1)];
            }
        }

        // rebuild exp/log from a trusted modulus (used by the cache loader)
        void tables_from_modulus() {
            if (!try_tables(modulus)) throw Internal("cached modulus does not generate");
        }

        bool load_cache(const std::string& dir) {
            namespace fs = std::filesystem;
            fs::path file = fs::path(dir) / cache_file_name(p, k);
            std::error_code ec;
            auto size = fs::file_size(file, ec);
            std::size_t want = static_cast<std::size_t>((k + 1) + (q - 1)) * 4;
            if (ec || size != want) return false;
            std::FILE* in = std::fopen(file.string().c_str(), "rb");
            if (!in) return false;
            std::vector<unsigned char> buf(want);
            bool ok = std::fread(buf.data(), 1, want, in) == want;
            std::fclose(in);
            if (!ok) return false;
            auto rd = [&buf](std::size_t i) {
                std::uint32_t v = buf[4 * i] | (buf[4 * i + 1] << 8) | (buf[4 * i + 2] << 16) |
                                  (static_cast<std::uint32_t>(buf[4 * i + 3]) << 24);
                return static_cast<std::int32_t>(v);
            };
            modulus.assign(static_cast<std::size_t>(k + 1), 0);
            for (int i = 0; i <= k; ++i) {
                std::int32_t v = rd(static_cast<std::size_t>(i));
                if (v < 0 || v >= p) return false;
                modulus[static_cast<std::size_t>(i)] = v;
            }
            if (modulus.back() != 1) return false;
            zech.assign(static_cast<std::size_t>(q - 1), -1);
            for (long long j = 0; j < q - 1; ++j) {
                std::int32_t v = rd(static_cast<std::size_t>(k + 1 + j));
                if (v < -1 || v >= q - 1) return false;
                zech[static_cast<std::size_t>(j)] = v;
            }
            try {
                tables_from_modulus();
            } catch (const Error&) {
                return false;
            }
            return true;
        }

        void store_cache(const std::string& dir) const {
            namespace fs = std::filesystem;
            std::error_code ec;
            fs::create_directories(dir, ec);
            fs::path file = fs::path(dir) / cache_file_name(p, k);
            fs::path tmp = file;
            tmp += ".tmp";
            std::FILE* out = std::fopen(tmp.string().c_str(), "wb");
            if (!out) return;  // cache is best-effort
            auto wr = [out](std::int32_t v) {
                unsigned char b[4] = {static_cast<unsigned char>(v & 0xff), static_cast<unsigned char>((v >> 8) & 0xff),
                                      static_cast<unsigned char>((v >> 16) & 0xff),
                                      static_cast<unsigned char>((static_cast<std::uint32_t>(v) >> 24) & 0xff)};
                std::fwrite(b, 1, 4, out);
            };
            for (long cmod : modulus) wr(static_cast<std::int32_t>(cmod));
            for (std::int32_t z : zech) wr(z);
            std::fclose(out);
            fs::rename(tmp, file, ec);
        }
    };

    std::shared_ptr<const Data> data_;
};

}  // namespace kl
