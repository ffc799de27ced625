#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "kl/rootsys.hpp"

namespace kl {

// Weights live in the weight lattice of the dual-side group and are stored in
// fundamental-weight coordinates (Dynkin labels): v[j] = <weight, alpha_j^vee>.
// A root with simple-root coefficients a has Dynkin vector (a^T * cartan).
struct WeightMultiset {
    RootSystem rs;
    std::map<std::vector<int>, long long> weights;
    long long dim = 0;

    static WeightMultiset empty(const RootSystem& rs) { return {rs, {}, 0}; }

    void add(const std::vector<int>& w, long long mult) {
        if (!mult) return;
        weights[w] += mult;
        dim += mult;
        if (weights[w] == 0) weights.erase(w);
    }
};

inline std::vector<int> dynkin_of_root(const RootSystem& rs, const std::vector<int>& coeff) {
    int n = rs.rank;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        long s = 0;
        for (int i = 0; i < n; ++i)
            s += static_cast<long>(coeff[static_cast<std::size_t>(i)]) *
                 rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(j)] = static_cast<int>(s);
    }
    return w;
}

// s_j in fundamental-weight coordinates: v -> v - v[j] * dynkin(alpha_j)
inline std::vector<int> reflect_weight(const RootSystem& rs, int j, const std::vector<int>& v) {
    std::vector<int> w = v;
    int c = v[static_cast<std::size_t>(j)];
    if (c == 0) return w;
    for (int i = 0; i < rs.rank; ++i)
        w[static_cast<std::size_t>(i)] -= c * rs.cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return w;
}

inline std::set<std::vector<int>> weyl_orbit_weights(const RootSystem& rs, const std::vector<int>& v) {
    std::set<std::vector<int>> orbit{v};
    std::vector<std::vector<int>> queue{v};
    while (!queue.empty()) {
        auto u = queue.back();
        queue.pop_back();
        for (int j = 0; j < rs.rank; ++j) {
            auto w = reflect_weight(rs, j, u);
            if (orbit.insert(w).second) queue.push_back(w);
        }
    }
    return orbit;
}

// nonzero weights = the short roots, plus 0 with multiplicity r_s
inline WeightMultiset quasi_minuscule(const RootSystem& rs_dual) {
    WeightMultiset V = WeightMultiset::empty(rs_dual);
    for (const auto& r : rs_dual.roots)
        if (r.is_short) V.add(dynkin_of_root(rs_dual, r.coeff), 1);
    V.add(std::vector<int>(static_cast<std::size_t>(rs_dual.rank), 0), rs_dual.r_s);
    return V;
}

// all roots with multiplicity 1, plus 0 with multiplicity rank
inline WeightMultiset adjoint_rep(const RootSystem& rs_dual) {
    WeightMultiset V = WeightMultiset::empty(rs_dual);
    for (const auto& r : rs_dual.roots) V.add(dynkin_of_root(rs_dual, r.coeff), 1);
    V.add(std::vector<int>(static_cast<std::size_t>(rs_dual.rank), 0), rs_dual.rank);
    return V;
}

// defining representation of the classical groups and of G2:
//   A_n -> SL_{n+1} standard (orbit of omega_1)
//   C_n -> Sp_{2n} standard  (orbit of omega_1)
//   B_n -> SO_{2n+1} vector  (= quasi-minuscule)
//   G_2 -> the 7-dimensional representation (= quasi-minuscule)
inline WeightMultiset standard_rep(const RootSystem& rs_dual) {
    switch (rs_dual.label.type) {
        case SimpleType::A:
        case SimpleType::C: {
            WeightMultiset V = WeightMultiset::empty(rs_dual);
            std::vector<int> omega1(static_cast<std::size_t>(rs_dual.rank), 0);
            omega1[0] = 1;
            for (const auto& w : weyl_orbit_weights(rs_dual, omega1)) V.add(w, 1);
            return V;
        }
        case SimpleType::B:
        case SimpleType::G:
            return quasi_minuscule(rs_dual);
        default:
            throw Error("no defining representation wired for type " + rs_dual.label.str());
    }
}

inline WeightMultiset dual_multiset(const WeightMultiset& V) {
    WeightMultiset W = WeightMultiset::empty(V.rs);
    for (const auto& [w, m] : V.weights) {
        std::vector<int> neg = w;
        for (auto& x : neg) x = -x;
        W.add(neg, m);
    }
    return W;
}

// half the squared-length grading used for principal sl2 strings:
// coefficients of the sum of positive coroots in the simple-coroot basis
inline std::vector<long> two_rho_coroot(const RootSystem& rs) {
    std::vector<long> c(static_cast<std::size_t>(rs.rank), 0);
    for (const auto& r : rs.roots) {
        if (r.height <= 0) continue;
        for (int i = 0; i < rs.rank; ++i) c[static_cast<std::size_t>(i)] += r.coroot[static_cast<std::size_t>(i)];
    }
    return c;
}

inline long principal_grade(const RootSystem& rs, const std::vector<long>& tworho, const std::vector<int>& w) {
    long s = 0;
    for (int i = 0; i < rs.rank; ++i) s += tworho[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
    return s;
}

// Weyl dimension formula in exact arithmetic: the numerator and denominator
// products are accumulated as prime-exponent vectors, so nothing overflows
// up to E8 tensor squares.
inline long long weyl_dim(const RootSystem& rs, const std::vector<int>& lambda) {
    std::map<long, long> expo;
    auto mul_factor = [&expo](long v, int sgn) {
        for (long d = 2; d * d <= v; ++d)
            while (v % d == 0) {
                expo[d] += sgn;
                v /= d;
            }
        if (v > 1) expo[v] += sgn;
    };
    for (const auto& r : rs.roots) {
        if (r.height <= 0) continue;
        long num = 0, den = 0;
        for (int i = 0; i < rs.rank; ++i) {
            num += static_cast<long>(lambda[static_cast<std::size_t>(i)] + 1) * r.coroot[static_cast<std::size_t>(i)];
            den += r.coroot[static_cast<std::size_t>(i)];
        }
        if (num <= 0) throw Error("weyl_dim requires a dominant weight");
        mul_factor(num, +1);
        mul_factor(den, -1);
    }
    long long dim = 1;
    for (auto [prime, e] : expo) {
        if (e < 0) throw Internal("Weyl dimension is not an integer");
        for (long i = 0; i < e; ++i) dim *= prime;
    }
    return dim;
}

namespace detail_rep {

// dominant representative of nu under the rho-shifted action; sign flips per
// reflection; returns 0 if nu lands on a wall
inline int dominantize_shifted(const RootSystem& rs, std::vector<int>& nu) {
    int sign = 1;
    for (int guard = 0; guard < 100000; ++guard) {
        int neg = -1;
        bool zero = false;
        for (int j = 0; j < rs.rank; ++j) {
            int c = nu[static_cast<std::size_t>(j)];
            if (c < 0) {
                neg = j;
                break;
            }
            if (c == 0) zero = true;
        }
        if (neg < 0) return zero ? 0 : sign;
        nu = reflect_weight(rs, neg, nu);
        sign = -sign;
    }
    throw Internal("dominantization did not terminate");
}

}  // namespace detail_rep

// V(lambda) (x) W as a sum of irreducibles, by the Racah/Brauer-Klimyk rule:
// every weight mu of W contributes sign(dom(lambda + mu + rho)) copies of the
// dominantized summand; the output is a genuine decomposition.
inline std::map<std::vector<int>, long long> tensor_with(const RootSystem& rs, const std::vector<int>& lambda,
                                                         const WeightMultiset& W) {
    std::map<std::vector<int>, long long> out;
    for (const auto& [mu, m] : W.weights) {
        std::vector<int> nu(static_cast<std::size_t>(rs.rank));
        for (int i = 0; i < rs.rank; ++i)
            nu[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + mu[static_cast<std::size_t>(i)] + 1;
        int sign = detail_rep::dominantize_shifted(rs, nu);
        if (!sign) continue;
        for (auto& x : nu) x -= 1;  // strip rho
        out[nu] += sign * m;
        if (out[nu] == 0) out.erase(nu);
    }
    for (const auto& [w, m] : out)
        if (m < 0) throw Internal("tensor decomposition produced a negative multiplicity");
    return out;
}

// highest weight of a multiset presented as a single irreducible; throws
// NotIrreducible when the presentation does not match
inline std::vector<int> highest_weight_of(const WeightMultiset& V) {
    if (V.weights.empty()) throw NotIrreducible("empty weight multiset");
    auto tworho = two_rho_coroot(V.rs);
    const std::vector<int>* best = nullptr;
    long best_grade = 0;
    bool tie = false;
    for (const auto& [w, m] : V.weights) {
        long g = principal_grade(V.rs, tworho, w);
        if (!best || g > best_grade) {
            best = &w;
            best_grade = g;
            tie = false;
        } else if (g == best_grade) {
            tie = true;
        }
    }
    if (tie) throw NotIrreducible("no unique highest weight");
    for (int c : *best)
        if (c < 0) throw NotIrreducible("highest weight is not dominant");
    if (V.weights.at(*best) != 1) throw NotIrreducible("highest weight has multiplicity > 1");
    if (weyl_dim(V.rs, *best) != V.dim) throw NotIrreducible("dimension does not match the highest weight");
    return *best;
}

inline std::map<std::vector<int>, long long> tensor_decompose(const WeightMultiset& V, const WeightMultiset& W) {
    return tensor_with(V.rs, highest_weight_of(V), W);
}

// dim of the invariant subspace of V^{(x) k}
inline long long invariant_moment(const WeightMultiset& V, int k) {
    const RootSystem& rs = V.rs;
    std::vector<int> zero(static_cast<std::size_t>(rs.rank), 0);
    std::map<std::vector<int>, long long> cur{{zero, 1}};
    for (int step = 0; step < k; ++step) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [lam, mult] : cur)
            for (const auto& [lam2, mult2] : tensor_with(rs, lam, V)) {
                next[lam2] += mult * mult2;
                if (next[lam2] == 0) next.erase(lam2);
            }
        cur = std::move(next);
    }
    auto it = cur.find(zero);
    return it == cur.end() ? 0 : it->second;
}

// dim of invariants of V^{(x) a} (x) (V*)^{(x) b}
inline long long mixed_moment(const WeightMultiset& V, int a, int b) {
    const RootSystem& rs = V.rs;
    WeightMultiset Vd = dual_multiset(V);
    std::vector<int> zero(static_cast<std::size_t>(rs.rank), 0);
    std::map<std::vector<int>, long long> cur{{zero, 1}};
    for (int step = 0; step < a + b; ++step) {
        const WeightMultiset& factor = step < a ? V : Vd;
        std::map<std::vector<int>, long long> next;
        for (const auto& [lam, mult] : cur)
            for (const auto& [lam2, mult2] : tensor_with(rs, lam, factor)) {
                next[lam2] += mult * mult2;
                if (next[lam2] == 0) next.erase(lam2);
            }
        cur = std::move(next);
    }
    auto it = cur.find(zero);
    return it == cur.end() ? 0 : it->second;
}

// Decompose V under a principal sl2: grade by the pairing with the sum of
// positive coroots, then peel symmetric-power strings from the top level
// down. Returns the l_i with V = sum_i Sym^{2 l_i}(std).
inline std::vector<long> principal_strings(const WeightMultiset& V) {
    auto tworho = two_rho_coroot(V.rs);
    std::map<long, long long> level;
    for (const auto& [w, m] : V.weights) level[principal_grade(V.rs, tworho, w)] += m;
    if (level.empty()) return {};
    long top = level.rbegin()->first;
    long bot = level.begin()->first;
    if (top != -bot) throw NotSL2Decomposable("grading is not symmetric");
    std::vector<long> ls;
    for (long t = top; t >= 1; --t) {
        long long here = level.count(t) ? level[t] : 0;
        long long above = level.count(t + 2) ? level[t + 2] : 0;
        long long strings = here - above;
        if (strings < 0) throw NotSL2Decomposable("negative string count at grade " + std::to_string(t));
        if (strings > 0) {
            if (t % 2) throw NotSL2Decomposable("odd top grade " + std::to_string(t));
            for (long long s = 0; s < strings; ++s) ls.push_back(t / 2);
        }
    }
    // grade-0 strings (trivial summands)
    long long zero_here = level.count(0) ? level[0] : 0;
    long long zero_above = level.count(2) ? level[2] : 0;
    if (zero_here - zero_above < 0) throw NotSL2Decomposable("negative string count at grade 0");
    for (long long s = 0; s < zero_here - zero_above; ++s) ls.push_back(0);
    std::sort(ls.begin(), ls.end(), std::greater<>());
    // conservation: sum of string dimensions equals dim V
    long long total = 0;
    for (long l : ls) total += 2 * l + 1;
    if (total != V.dim) throw NotSL2Decomposable("string dimensions do not add up");
    return ls;
}

}  // namespace kl
