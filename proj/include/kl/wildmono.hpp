#pragma once

#include <string>
#include <vector>

#include "kl/fppoly.hpp"
#include "kl/linalg.hpp"
#include "kl/repweights.hpp"
#include "kl/rootsys.hpp"

namespace kl {

// The inertia parameter at infinity, at the level of exact linear algebra
// mod p: the Coxeter element acting on the coroot lattice mod p, and the
// unique Cox-stable submodule T(zeta) on which it acts through a primitive
// h-th root of unity zeta. Requires p not dividing the Weyl group order;
// zeta itself is never materialized, only the minimal polynomial of its
// Galois orbit matters.
struct WildParameter {
    RootSystem rs;  // of the dual group
    long p = 0;
    long long weyl_order = 0;
    int h = 0;
    int d = 0;  // multiplicative order of p mod h = dim T(zeta)
    IntMat cox;
    std::vector<long long> charpoly;              // integer characteristic polynomial
    std::vector<std::pair<FpPoly, int>> factors;  // mod-p factorization with multiplicities
    std::vector<int> qualifying;                  // indices of primitive-h-th-root factors
    int chosen = -1;                              // lexicographically smallest qualifying factor
    std::vector<std::vector<long>> t_zeta_basis;  // d vectors over F_p
};

namespace detail_wild {

inline long long mod_order(long long a, long long n) {
    a %= n;
    if (a < 0) a += n;
    long long x = a % n, ord = 1;
    while (x != 1) {
        x = x * a % n;
        ++ord;
        if (ord > n) throw Internal("element not invertible in mod_order");
    }
    return ord;
}

// does every root of the irreducible g have multiplicative order exactly h?
inline bool roots_have_order(const FpPoly& g, long long h) {
    FpPoly xh = fppoly::powmod(FpPoly::x(g.p), h, g);
    if (!(xh == FpPoly::one(g.p))) return false;
    for (long long l : detail::prime_divisors(h)) {
        FpPoly xe = fppoly::powmod(FpPoly::x(g.p), h / l, g);
        if (xe == FpPoly::one(g.p)) return false;
    }
    return true;
}

// g evaluated at the matrix M over F_p
inline std::vector<std::vector<long>> poly_at_matrix(const FpPoly& g, const IntMat& M, long p) {
    int n = static_cast<int>(M.size());
    std::vector<std::vector<long>> acc(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    auto mulm = [n, p](const std::vector<std::vector<long>>& a, const IntMat& b) {
        std::vector<std::vector<long>> c(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                long long av = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (!av) continue;
                for (int j = 0; j < n; ++j) {
                    long long bv = ((b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] % p) + p) % p;
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        static_cast<long>((c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + av * bv) % p);
                }
            }
        return c;
    };
    // Horner from the top coefficient
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = g.c.back() % g.p;
    for (int t = g.degree() - 1; t >= 0; --t) {
        acc = mulm(acc, M);
        long coeff = ((g.c[static_cast<std::size_t>(t)] % p) + p) % p;
        for (int i = 0; i < n; ++i)
            acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                static_cast<long>((acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] + coeff) % p);
    }
    return acc;
}

// kernel basis of g(Cox) mod p
inline std::vector<std::vector<long>> tzeta_basis_for_factor(const WildParameter& wp, const FpPoly& g) {
    auto gm = poly_at_matrix(g, wp.cox, wp.p);
    return nullspace_mod_p(gm, wp.p);
}

// pairing row of a root as a functional on the coroot lattice, mod p
inline std::vector<long> root_functional(const RootSystem& rs, const Root& alpha, long p) {
    std::vector<long> row(static_cast<std::size_t>(rs.rank), 0);
    for (int j = 0; j < rs.rank; ++j) {
        long s = 0;
        for (int i = 0; i < rs.rank; ++i)
            s += static_cast<long>(alpha.coeff[static_cast<std::size_t>(i)]) *
                 rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(j)] = ((s % p) + p) % p;
    }
    return row;
}

inline long count_roots_nontrivial(const RootSystem& rs, long p, const std::vector<std::vector<long>>& basis) {
    long count = 0;
    for (const auto& alpha : rs.roots) {
        auto row = root_functional(rs, alpha, p);
        bool trivial = true;
        for (const auto& v : basis) {
            long long s = 0;
            for (int j = 0; j < rs.rank; ++j) s += (long long)row[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            if (s % p != 0) {
                trivial = false;
                break;
            }
        }
        if (!trivial) ++count;
    }
    return count;
}

}  // namespace detail_wild

inline WildParameter wild_construct(const RootSystem& rs, long p, std::uint64_t seed = 0) {
    WildParameter wp;
    wp.rs = rs;
    wp.p = p;
    wp.h = rs.h;
    wp.weyl_order = rs.weyl_order();
    if (!detail::is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (wp.weyl_order % p == 0)
        throw BadPrime("p = " + std::to_string(p) + " divides the Weyl group order of " + rs.label.str());

    wp.cox = coxeter_matrix(rs);
    wp.charpoly = charpoly_int(wp.cox);
    wp.d = static_cast<int>(detail_wild::mod_order(p, rs.h));

    FpPoly cp{p, {}};
    for (long long c : wp.charpoly) cp.c.push_back(static_cast<long>(((c % p) + p) % p));
    cp.trim();
    wp.factors = fppoly::factor(cp, seed);

    for (std::size_t i = 0; i < wp.factors.size(); ++i) {
        const auto& [g, mult] = wp.factors[i];
        if (g.degree() != wp.d) continue;
        if (!detail_wild::roots_have_order(g, rs.h)) continue;
        wp.qualifying.push_back(static_cast<int>(i));
    }
    if (wp.qualifying.empty()) throw Internal("no primitive-order factor found for " + rs.label.str());
    wp.chosen = wp.qualifying.front();  // factor list is sorted, so this is lex smallest
    if (wp.factors[static_cast<std::size_t>(wp.chosen)].second != 1)
        throw NonUniqueSubmodule("chosen factor divides the characteristic polynomial more than once");

    wp.t_zeta_basis = detail_wild::tzeta_basis_for_factor(wp, wp.factors[static_cast<std::size_t>(wp.chosen)].first);
    if (static_cast<int>(wp.t_zeta_basis.size()) != wp.d)
        throw NonUniqueSubmodule("kernel dimension " + std::to_string(wp.t_zeta_basis.size()) + " != ord_p(h) = " +
                                 std::to_string(wp.d));
    return wp;
}

// true iff no root of the dual group vanishes identically on T(zeta)
inline bool roots_nontrivial_on_tzeta(const WildParameter& wp) {
    return detail_wild::count_roots_nontrivial(wp.rs, wp.p, wp.t_zeta_basis) ==
           static_cast<long>(wp.rs.roots.size());
}

struct SwanBreakdown {
    long nontrivial_roots = 0;
    long swan = 0;                // (#roots nontrivial on T(zeta)) / h
    long dim_wild_invariants = 0; // rank + #roots trivial on T(zeta)
};

// all nonzero breaks equal 1/h, so Swan = (#nontrivially-ramified root lines)/h
inline SwanBreakdown swan_from_breaks(const WildParameter& wp) {
    SwanBreakdown s;
    s.nontrivial_roots = detail_wild::count_roots_nontrivial(wp.rs, wp.p, wp.t_zeta_basis);
    if (s.nontrivial_roots % wp.rs.h != 0)
        throw NonIntegerSwan("root count " + std::to_string(s.nontrivial_roots) + " not divisible by h = " +
                             std::to_string(wp.rs.h));
    s.swan = s.nontrivial_roots / wp.rs.h;
    s.dim_wild_invariants = wp.rs.rank + (static_cast<long>(wp.rs.roots.size()) - s.nontrivial_roots);
    return s;
}

// Swan count re-run against a specific qualifying factor (used to confirm
// the Galois-orbit choice does not matter)
inline SwanBreakdown swan_for_factor(const WildParameter& wp, int qualifying_index) {
    const FpPoly& g = wp.factors[static_cast<std::size_t>(wp.qualifying[static_cast<std::size_t>(qualifying_index)])].first;
    auto basis = detail_wild::tzeta_basis_for_factor(wp, g);
    SwanBreakdown s;
    s.nontrivial_roots = detail_wild::count_roots_nontrivial(wp.rs, wp.p, basis);
    if (s.nontrivial_roots % wp.rs.h != 0) throw NonIntegerSwan("non-integral Swan for alternate factor");
    s.swan = s.nontrivial_roots / wp.rs.h;
    s.dim_wild_invariants = wp.rs.rank + (static_cast<long>(wp.rs.roots.size()) - s.nontrivial_roots);
    return s;
}

// det(Cox - 1) != 0: the Coxeter element fixes no nonzero covector, so the
// tame quotient leaves no invariants either
inline bool cox_tame_no_invariants(const RootSystem& rs) {
    IntMat m = coxeter_matrix(rs);
    for (int i = 0; i < rs.rank; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= 1;
    return int_det(m) != 0;
}

struct Pgl2Bound {
    std::vector<long> strings;  // the l_i of the quasi-minuscule string decomposition
    long bound = 0;             // sum l_i - floor(l_i / p)
    long r_s = 0;
    bool excluded = false;      // bound > r_s (only meaningful for rank >= 2)
};

// Swan lower bound along a principal PGL2: each symmetric-power string of the
// quasi-minuscule representation contributes at least l - floor(l/p), and the
// total exceeding r_s rules the principal PGL2 out as full monodromy.
inline Pgl2Bound pgl2_swan_bound(const RootSystem& rs, long p) {
    Pgl2Bound b;
    b.strings = principal_strings(quasi_minuscule(rs));
    b.r_s = rs.r_s;
    for (long l : b.strings) b.bound += l - l / p;
    b.excluded = rs.rank >= 2 && b.bound > b.r_s;
    return b;
}

}  // namespace kl
