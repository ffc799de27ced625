#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "kl/errors.hpp"

namespace kl {

// Conventions used throughout:
//   * cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)
//   * roots are integer vectors in the simple-root basis
//   * coroots are integer vectors in the simple-coroot basis
//   * d[i] = (alpha_i,alpha_i)/2, normalized so short simple roots have d = 1;
//     then (alpha_i,alpha_j) = d[j] * cartan[i][j]
// Node numbering follows Bourbaki. In simply-laced types every root counts as
// both long and short (gamma = theta, r_s = r_l = rank).

enum class SimpleType { A, B, C, D, E, F, G };

inline char type_letter(SimpleType t) {
    switch (t) {
        case SimpleType::A: return 'A';
        case SimpleType::B: return 'B';
        case SimpleType::C: return 'C';
        case SimpleType::D: return 'D';
        case SimpleType::E: return 'E';
        case SimpleType::F: return 'F';
        case SimpleType::G: return 'G';
    }
    return '?';
}

struct TypeLabel {
    SimpleType type;
    int rank;

    std::string str() const { return std::string(1, type_letter(type)) + std::to_string(rank); }
    friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
        return a.type == b.type && a.rank == b.rank;
    }
};

inline TypeLabel parse_type(const std::string& s) {
    if (s.size() < 2) throw InvalidType("cannot parse type label '" + s + "'");
    SimpleType t;
    switch (s[0]) {
        case 'A': case 'a': t = SimpleType::A; break;
        case 'B': case 'b': t = SimpleType::B; break;
        case 'C': case 'c': t = SimpleType::C; break;
        case 'D': case 'd': t = SimpleType::D; break;
        case 'E': case 'e': t = SimpleType::E; break;
        case 'F': case 'f': t = SimpleType::F; break;
        case 'G': case 'g': t = SimpleType::G; break;
        default: throw InvalidType("cannot parse type label '" + s + "'");
    }
    int r = std::atoi(s.c_str() + 1);
    return {t, r};
}

struct Root {
    std::vector<int> coeff;    // simple-root basis
    std::vector<int> coroot;   // coroot in simple-coroot basis
    int height = 0;
    long norm2 = 0;            // (alpha, alpha) in the d-normalization
    bool is_long = false;
    bool is_short = false;
};

class RootSystem {
public:
    TypeLabel label;
    int rank = 0;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<long> d;                   // half the squared length of alpha_i
    std::vector<Root> roots;               // sorted by (height, lexicographic)
    int theta_index = -1;                  // highest root
    int gamma_index = -1;                  // dominant short root
    int h = 0;                             // Coxeter number
    int r_s = 0, r_l = 0;                  // short / long rank
    std::vector<int> degrees;              // fundamental degrees (Weyl order = product)

    static RootSystem build(SimpleType t, int rank) { return build(TypeLabel{t, rank}); }
    static RootSystem build(const TypeLabel& lbl);

    const Root& theta() const { return roots[static_cast<std::size_t>(theta_index)]; }
    const Root& gamma() const { return roots[static_cast<std::size_t>(gamma_index)]; }

    long long weyl_order() const {
        long long w = 1;
        for (int deg : degrees) w *= deg;
        return w;
    }

    int num_short_roots() const {
        int c = 0;
        for (const auto& r : roots) c += r.is_short ? 1 : 0;
        return c;
    }
    int num_long_roots() const {
        int c = 0;
        for (const auto& r : roots) c += r.is_long ? 1 : 0;
        return c;
    }

    // <alpha, beta^vee> for alpha in root coords, beta^vee in coroot coords
    long pair_root_coroot(const std::vector<int>& a, const std::vector<int>& b) const {
        long s = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                s += static_cast<long>(a[static_cast<std::size_t>(i)]) * cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     b[static_cast<std::size_t>(j)];
        return s;
    }

    long pairing(int root_idx, int coroot_of_idx) const {
        return pair_root_coroot(roots[static_cast<std::size_t>(root_idx)].coeff,
                                roots[static_cast<std::size_t>(coroot_of_idx)].coroot);
    }

    int find_root(const std::vector<int>& coeff) const {
        auto it = index_.find(coeff);
        return it == index_.end() ? -1 : it->second;
    }

    // simple reflection s_j on a root-basis vector
    std::vector<int> reflect_root(int j, const std::vector<int>& v) const {
        long c = 0;
        for (int i = 0; i < rank; ++i)
            c += static_cast<long>(v[static_cast<std::size_t>(i)]) * cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        std::vector<int> w = v;
        w[static_cast<std::size_t>(j)] -= static_cast<int>(c);
        return w;
    }

    // simple reflection s_j on a coroot-basis vector
    std::vector<int> reflect_coroot(int j, const std::vector<int>& v) const {
        long c = 0;
        for (int i = 0; i < rank; ++i)
            c += static_cast<long>(cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
        std::vector<int> w = v;
        w[static_cast<std::size_t>(j)] -= static_cast<int>(c);
        return w;
    }

    std::vector<int> negate(const std::vector<int>& v) const {
        std::vector<int> w = v;
        for (auto& x : w) x = -x;
        return w;
    }

private:
    std::map<std::vector<int>, int> index_;
};

namespace detail_roots {

inline void add_edge(std::vector<std::vector<int>>& c, int i, int j) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
}

inline std::vector<int> exponents_for(const TypeLabel& l) {
    int n = l.rank;
    std::vector<int> e;
    switch (l.type) {
        case SimpleType::A:
            for (int i = 1; i <= n; ++i) e.push_back(i);
            break;
        case SimpleType::B:
        case SimpleType::C:
            for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
            break;
        case SimpleType::D:
            for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
            e.push_back(n - 1);
            std::sort(e.begin(), e.end());
            break;
        case SimpleType::E:
            if (n == 6) e = {1, 4, 5, 7, 8, 11};
            if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
            if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case SimpleType::F: e = {1, 5, 7, 11}; break;
        case SimpleType::G: e = {1, 5}; break;
    }
    return e;
}

}  // namespace detail_roots

inline RootSystem RootSystem::build(const TypeLabel& lbl) {
    const int n = lbl.rank;
    auto bad = [&lbl]() { return InvalidType("no simple type " + lbl.str()); };
    switch (lbl.type) {
        case SimpleType::A:
            if (n < 1) throw bad();
            break;
        case SimpleType::B:
        case SimpleType::C:
            if (n < 2) throw bad();
            break;
        case SimpleType::D:
            if (n < 4) throw bad();
            break;
        case SimpleType::E:
            if (n < 6 || n > 8) throw bad();
            break;
        case SimpleType::F:
            if (n != 4) throw bad();
            break;
        case SimpleType::G:
            if (n != 2) throw bad();
            break;
    }

    RootSystem rs;
    rs.label = lbl;
    rs.rank = n;
    auto& C = rs.cartan;
    C.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) C[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    rs.d.assign(static_cast<std::size_t>(n), 1);

    using detail_roots::add_edge;
    switch (lbl.type) {
        case SimpleType::A:
            for (int i = 0; i + 1 < n; ++i) add_edge(C, i, i + 1);
            break;
        case SimpleType::B:  // alpha_n short, the rest long
            for (int i = 0; i + 2 < n; ++i) add_edge(C, i, i + 1);
            C[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
            C[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -1;
            for (int i = 0; i + 1 < n; ++i) rs.d[static_cast<std::size_t>(i)] = 2;
            break;
        case SimpleType::C:  // alpha_n long, the rest short
            for (int i = 0; i + 2 < n; ++i) add_edge(C, i, i + 1);
            C[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -1;
            C[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
            rs.d[static_cast<std::size_t>(n - 1)] = 2;
            break;
        case SimpleType::D:
            for (int i = 0; i + 3 < n; ++i) add_edge(C, i, i + 1);
            add_edge(C, n - 3, n - 2);
            add_edge(C, n - 3, n - 1);
            break;
        case SimpleType::E:
            // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-6(-7)(-8)
            add_edge(C, 0, 2);
            add_edge(C, 1, 3);
            add_edge(C, 2, 3);
            add_edge(C, 3, 4);
            add_edge(C, 4, 5);
            if (n >= 7) add_edge(C, 5, 6);
            if (n >= 8) add_edge(C, 6, 7);
            break;
        case SimpleType::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            add_edge(C, 0, 1);
            C[1][2] = -2;
            C[2][1] = -1;
            add_edge(C, 2, 3);
            rs.d[0] = rs.d[1] = 2;
            break;
        case SimpleType::G:  // alpha_1 short, alpha_2 long
            C[0][1] = -1;
            C[1][0] = -3;
            rs.d[1] = 3;
            break;
    }

    // close the simple roots under all simple reflections
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        seen.insert(v);
        queue.push_back(v);
    }
    while (!queue.empty()) {
        std::vector<int> v = queue.back();
        queue.pop_back();
        for (int j = 0; j < n; ++j) {
            std::vector<int> w = rs.reflect_root(j, v);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }

    // assemble Root records
    long min_norm = 0, max_norm = 0;
    std::vector<Root> roots;
    for (const auto& v : seen) {
        Root r;
        r.coeff = v;
        r.height = std::accumulate(v.begin(), v.end(), 0);
        long norm2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                norm2 += static_cast<long>(v[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(j)] *
                         rs.d[static_cast<std::size_t>(j)] * C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        r.norm2 = norm2;
        if (min_norm == 0 || norm2 < min_norm) min_norm = norm2;
        if (norm2 > max_norm) max_norm = norm2;
        long d_alpha = norm2 / 2;
        r.coroot.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            long num = static_cast<long>(v[static_cast<std::size_t>(i)]) * rs.d[static_cast<std::size_t>(i)];
            if (num % d_alpha != 0) throw Internal("coroot coefficients are not integral");
            r.coroot[static_cast<std::size_t>(i)] = static_cast<int>(num / d_alpha);
        }
        roots.push_back(std::move(r));
    }
    for (auto& r : roots) {
        r.is_short = r.norm2 == min_norm;
        r.is_long = r.norm2 == max_norm;
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coeff < b.coeff;
    });
    rs.roots = std::move(roots);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) rs.index_[rs.roots[i].coeff] = static_cast<int>(i);

    // theta = unique root of maximal height; gamma = unique dominant short root
    rs.theta_index = static_cast<int>(rs.roots.size()) - 1;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const Root& r = rs.roots[i];
        if (!r.is_short) continue;
        bool dominant = true;
        for (int j = 0; j < n && dominant; ++j) {
            long c = 0;
            for (int t = 0; t < n; ++t)
                c += static_cast<long>(r.coeff[static_cast<std::size_t>(t)]) * C[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            if (c < 0) dominant = false;
        }
        if (dominant) rs.gamma_index = static_cast<int>(i);
    }
    if (rs.gamma_index < 0) throw Internal("no dominant short root found");

    rs.h = static_cast<int>(rs.roots.size()) / n;
    for (int i = 0; i < n; ++i) {
        if (rs.d[static_cast<std::size_t>(i)] == min_norm / 2) ++rs.r_s;
        if (rs.d[static_cast<std::size_t>(i)] == max_norm / 2) ++rs.r_l;
    }
    auto exps = detail_roots::exponents_for(lbl);
    for (int e : exps) rs.degrees.push_back(e + 1);
    if (!exps.empty() && exps.back() + 1 != rs.h) throw Internal("Coxeter number disagrees with degrees");
    return rs;
}

// ---- operations ----

// Phi^beta_n = set of root indices alpha with <alpha, beta^vee> = n
inline std::vector<int> phi_level(const RootSystem& rs, int beta_index, long level) {
    std::vector<int> out;
    const auto& bv = rs.roots[static_cast<std::size_t>(beta_index)].coroot;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        if (rs.pair_root_coroot(rs.roots[i].coeff, bv) == level) out.push_back(static_cast<int>(i));
    return out;
}

inline std::vector<int> phi_at_least(const RootSystem& rs, int beta_index, long level) {
    std::vector<int> out;
    const auto& bv = rs.roots[static_cast<std::size_t>(beta_index)].coroot;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        if (rs.pair_root_coroot(rs.roots[i].coeff, bv) >= level) out.push_back(static_cast<int>(i));
    return out;
}

// Weyl orbit of a root-basis vector under all simple reflections (BFS; the
// Weyl group itself is never materialized)
inline std::set<std::vector<int>> weyl_orbit_roots(const RootSystem& rs, const std::vector<int>& v) {
    std::set<std::vector<int>> orbit{v};
    std::vector<std::vector<int>> queue{v};
    while (!queue.empty()) {
        auto u = queue.back();
        queue.pop_back();
        for (int j = 0; j < rs.rank; ++j) {
            auto w = rs.reflect_root(j, u);
            if (orbit.insert(w).second) queue.push_back(w);
        }
    }
    return orbit;
}

inline std::set<std::vector<int>> weyl_orbit_coweights(const RootSystem& rs, const std::vector<int>& v) {
    std::set<std::vector<int>> orbit{v};
    std::vector<std::vector<int>> queue{v};
    while (!queue.empty()) {
        auto u = queue.back();
        queue.pop_back();
        for (int j = 0; j < rs.rank; ++j) {
            auto w = rs.reflect_coroot(j, u);
            if (orbit.insert(w).second) queue.push_back(w);
        }
    }
    return orbit;
}

// #(W_theta / W_theta  cap W_gamma): the orbit of gamma under the stabilizer
// of theta, generated by the simple reflections orthogonal to theta
inline long parabolic_orbit_index(const RootSystem& rs) {
    std::vector<int> gens;
    for (int j = 0; j < rs.rank; ++j) {
        long c = rs.pair_root_coroot(rs.theta().coeff, [&] {
            std::vector<int> e(static_cast<std::size_t>(rs.rank), 0);
            e[static_cast<std::size_t>(j)] = 1;
            return e;
        }());
        if (c == 0) gens.push_back(j);
    }
    std::set<std::vector<int>> orbit{rs.gamma().coeff};
    std::vector<std::vector<int>> queue{rs.gamma().coeff};
    while (!queue.empty()) {
        auto u = queue.back();
        queue.pop_back();
        for (int j : gens) {
            auto w = rs.reflect_root(j, u);
            if (orbit.insert(w).second) queue.push_back(w);
        }
    }
    return static_cast<long>(orbit.size());
}

// Coxeter element s_1 s_2 ... s_r acting on the coroot lattice, as a matrix
// (columns = images of basis coroots)
inline std::vector<std::vector<long long>> coxeter_matrix(const RootSystem& rs) {
    int n = rs.rank;
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(j)] = 1;
        // apply s_r first, s_1 last: the operator for the word s_1 s_2 ... s_r
        for (int t = n - 1; t >= 0; --t) v = rs.reflect_coroot(t, v);
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)];
    }
    return m;
}

inline int matrix_order(const std::vector<std::vector<long long>>& m, int cap = 1000) {
    int n = static_cast<int>(m.size());
    auto id = [n]() {
        std::vector<std::vector<long long>> e(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return e;
    };
    auto mul = [n](const auto& a, const auto& b) {
        std::vector<std::vector<long long>> c(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        return c;
    };
    auto acc = m;
    for (int ord = 1; ord <= cap; ++ord) {
        if (acc == id()) return ord;
        acc = mul(acc, m);
    }
    throw Internal("matrix order exceeds cap");
}

inline TypeLabel dual_type(const TypeLabel& l) {
    if (l.type == SimpleType::B) return {SimpleType::C, l.rank};
    if (l.type == SimpleType::C) return {SimpleType::B, l.rank};
    return l;
}

inline RootSystem dual(const RootSystem& rs) { return RootSystem::build(dual_type(rs.label)); }

// every valid simple type of rank <= max_rank, in a fixed order
inline std::vector<TypeLabel> all_simple_types(int max_rank = 8) {
    std::vector<TypeLabel> out;
    for (int r = 1; r <= max_rank; ++r) out.push_back({SimpleType::A, r});
    for (int r = 2; r <= max_rank; ++r) out.push_back({SimpleType::B, r});
    for (int r = 2; r <= max_rank; ++r) out.push_back({SimpleType::C, r});
    for (int r = 4; r <= max_rank; ++r) out.push_back({SimpleType::D, r});
    for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({SimpleType::E, r});
    if (max_rank >= 4) out.push_back({SimpleType::F, 4});
    if (max_rank >= 2) out.push_back({SimpleType::G, 2});
    return out;
}

}  // namespace kl
