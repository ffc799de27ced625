#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kl/config.hpp"
#include "kl/errors.hpp"

namespace kl {

// Monic-leaning polynomial arithmetic over F_p for small p and degree <= 8.
// Coefficients lowest degree first, trimmed, in [0, p).
struct FpPoly {
    long p = 2;
    std::vector<long> c;

    static FpPoly zero(long p) { return {p, {}}; }
    static FpPoly one(long p) { return {p, {1}}; }
    static FpPoly x(long p) { return {p, {0, 1}}; }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back() % p == 0) c.pop_back();
        for (auto& v : c) v = ((v % p) + p) % p;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "]";
    }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }
    friend bool operator<(const FpPoly& a, const FpPoly& b) {  // degree, then lex lowest-first
        if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
        return a.c < b.c;
    }
};

namespace fppoly {

inline long inv_mod(long x, long p) {
    long long t = 1, b = ((x % p) + p) % p, e = p - 2;
    while (e) {
        if (e & 1) t = t * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<long>(t);
}

inline FpPoly add(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, std::vector<long>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

inline FpPoly sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, std::vector<long>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

inline FpPoly mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p);
    FpPoly r{a.p, std::vector<long>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = static_cast<long>((r.c[i + j] + (long long)a.c[i] * b.c[j]) % a.p);
    r.trim();
    return r;
}

inline FpPoly rem(FpPoly a, const FpPoly& b) {
    a.trim();
    if (b.is_zero()) throw DivisionByZero("polynomial remainder by zero");
    long li = inv_mod(b.c.back(), a.p);
    while (a.c.size() >= b.c.size()) {
        long long f = (long long)a.c.back() * li % a.p;
        std::size_t off = a.c.size() - b.c.size();
        for (std::size_t j = 0; j < b.c.size(); ++j)
            a.c[off + j] = static_cast<long>((((a.c[off + j] - f * b.c[j]) % a.p) + a.p) % a.p);
        a.trim();
    }
    return a;
}

inline FpPoly quot(FpPoly a, const FpPoly& b) {
    a.trim();
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    long li = inv_mod(b.c.back(), a.p);
    if (a.c.size() < b.c.size()) return FpPoly::zero(a.p);
    FpPoly q{a.p, std::vector<long>(a.c.size() - b.c.size() + 1, 0)};
    while (a.c.size() >= b.c.size() && !a.is_zero()) {
        long long f = (long long)a.c.back() * li % a.p;
        std::size_t off = a.c.size() - b.c.size();
        q.c[off] = static_cast<long>(f);
        for (std::size_t j = 0; j < b.c.size(); ++j)
            a.c[off + j] = static_cast<long>((((a.c[off + j] - f * b.c[j]) % a.p) + a.p) % a.p);
        a.trim();
    }
    q.trim();
    return q;
}

inline FpPoly gcd(FpPoly a, FpPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) {  // normalize monic
        long li = inv_mod(a.c.back(), a.p);
        for (auto& v : a.c) v = static_cast<long>((long long)v * li % a.p);
    }
    return a;
}

inline FpPoly make_monic(FpPoly a) {
    a.trim();
    if (a.is_zero() || a.c.back() == 1) return a;
    long li = inv_mod(a.c.back(), a.p);
    for (auto& v : a.c) v = static_cast<long>((long long)v * li % a.p);
    return a;
}

inline FpPoly powmod(FpPoly base, long long e, const FpPoly& f) {
    FpPoly r = FpPoly::one(base.p);
    base = rem(base, f);
    while (e > 0) {
        if (e & 1) r = rem(mul(r, base), f);
        base = rem(mul(base, base), f);
        e >>= 1;
    }
    return r;
}

inline FpPoly derivative(const FpPoly& a) {
    FpPoly r{a.p, {}};
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(static_cast<long>((long long)a.c[i] * static_cast<long long>(i % static_cast<std::size_t>(a.p)) % a.p));
    r.trim();
    return r;
}

// distinct-degree then (Cantor-Zassenhaus) equal-degree splitting; p odd.
// Randomness comes from a fixed-seed generator so factor lists reproduce.
inline std::vector<std::pair<FpPoly, int>> factor(const FpPoly& input, std::uint64_t seed = 0) {
    FpPoly f = make_monic(input);
    long p = f.p;
    if (f.degree() < 1) return {};
    std::vector<std::pair<FpPoly, int>> out;

    // square-free layers: layer k is the product of the distinct irreducible
    // factors of multiplicity >= k, so each irreducible shows up once per
    // layer and the merge below just counts appearances
    std::vector<FpPoly> squarefree;
    {
        FpPoly rest = f;
        while (rest.degree() >= 1) {
            FpPoly d = derivative(rest);
            if (d.is_zero()) throw Internal("inseparable polynomial in factorizer");
            FpPoly g = gcd(rest, d);
            FpPoly sqfree = quot(rest, g);
            if (sqfree.degree() >= 1) squarefree.push_back(sqfree);
            if (g.degree() < 1) break;
            rest = g;
        }
    }

    Rng rng(seed);
    for (auto& sf : squarefree) {
        const int base_mult = 1;
        // distinct-degree on the square-free part
        FpPoly work = sf;
        for (int d = 1; work.degree() >= 1 && d <= work.degree(); ++d) {
            FpPoly xpd = powmod(FpPoly::x(p), [&] {
                long long e = 1;
                for (int i = 0; i < d; ++i) e *= p;
                return e;
            }(), work);
            FpPoly g = gcd(sub(xpd, FpPoly::x(p)), work);
            if (g.degree() >= 1) {
                // g = product of the irreducible factors of degree d; split it
                std::vector<FpPoly> stack{g};
                std::vector<FpPoly> irred;
                while (!stack.empty()) {
                    FpPoly h = stack.back();
                    stack.pop_back();
                    if (h.degree() == d) {
                        irred.push_back(make_monic(h));
                        continue;
                    }
                    // Cantor-Zassenhaus split for odd p
                    long long pd = 1;
                    for (int i = 0; i < d; ++i) pd *= p;
                    for (;;) {
                        FpPoly r{p, {}};
                        r.c.resize(static_cast<std::size_t>(h.degree()), 0);
                        for (auto& v : r.c) v = static_cast<long>(rng.below(static_cast<std::uint64_t>(p)));
                        r.trim();
                        if (r.degree() < 1) continue;
                        FpPoly t = sub(powmod(r, (pd - 1) / 2, h), FpPoly::one(p));
                        FpPoly u = gcd(t, h);
                        if (u.degree() >= 1 && u.degree() < h.degree()) {
                            stack.push_back(u);
                            stack.push_back(quot(h, u));
                            break;
                        }
                    }
                }
                std::sort(irred.begin(), irred.end());
                for (auto& q : irred) out.push_back({q, base_mult});
                work = quot(work, g);
            }
        }
        if (work.degree() >= 1) out.push_back({make_monic(work), base_mult});
    }

    // merge duplicates across square-free layers and order deterministically
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<FpPoly, int>> merged;
    for (auto& [q, m] : out) {
        if (!merged.empty() && merged.back().first == q)
            merged.back().second += m;
        else
            merged.push_back({q, m});
    }
    return merged;
}

}  // namespace fppoly

}  // namespace kl
