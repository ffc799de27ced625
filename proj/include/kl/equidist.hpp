#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "kl/repweights.hpp"
#include "kl/sums.hpp"

namespace kl {

// Which compact group the normalized Frobenius traces should equidistribute
// in, with the representation the trace is taken in.
struct MonodromyTarget {
    std::string label;   // "Sp4", "SL3", "SO7", "G2", "F4", ...
    std::string rep;     // "standard", "vector", "V7", "adjoint"
    std::string source;  // "kl_n" or "dual_type"
    TypeLabel group_type{SimpleType::A, 1};
    bool self_dual = true;   // real traces, plain moments suffice
    bool moments_available = true;
};

// classical-case lookup: the Zariski closure of the geometric monodromy of
// the n-variable sum in characteristic p
inline MonodromyTarget monodromy_target(int n, long p) {
    MonodromyTarget t;
    t.source = "kl_n";
    if (n < 2) throw Unlisted("no monodromy listed for n = " + std::to_string(n));
    if (n % 2 == 0) {
        t.label = "Sp" + std::to_string(n);
        t.rep = "standard";
        t.group_type = n == 2 ? TypeLabel{SimpleType::A, 1} : TypeLabel{SimpleType::C, n / 2};
        t.self_dual = true;
        return t;
    }
    if (p != 2) {
        t.label = "SL" + std::to_string(n);
        t.rep = "standard";
        t.group_type = {SimpleType::A, n - 1};
        t.self_dual = false;
        return t;
    }
    if (n == 7) {
        t.label = "G2";
        t.rep = "V7";
        t.group_type = {SimpleType::G, 2};
        t.self_dual = true;
        return t;
    }
    if (n == 3) throw Unlisted("n = 3, p = 2 is excluded from the monodromy list");
    t.label = "SO" + std::to_string(n);
    t.rep = "vector";
    t.group_type = {SimpleType::B, (n - 1) / 2};
    t.self_dual = true;
    return t;
}

// dual-group lookup: global geometric monodromy per dual type
inline MonodromyTarget monodromy_target_dual(const TypeLabel& dual_type) {
    MonodromyTarget t;
    t.source = "dual_type";
    auto set = [&t](TypeLabel g, const std::string& rep, bool moments) {
        t.group_type = g;
        t.rep = rep;
        t.label = g.str();
        t.moments_available = moments;
    };
    switch (dual_type.type) {
        case SimpleType::A:
            if (dual_type.rank % 2 == 0) {
                set(dual_type, "standard", true);  // A_{2n} stays A_{2n}
                t.self_dual = false;
                t.label = "SL" + std::to_string(dual_type.rank + 1);
            } else {
                int n = (dual_type.rank + 1) / 2;  // A_{2n-1} -> C_n
                set(n == 1 ? TypeLabel{SimpleType::A, 1} : TypeLabel{SimpleType::C, n}, "standard", true);
                t.label = "Sp" + std::to_string(2 * n);
            }
            return t;
        case SimpleType::C:
            set(dual_type, "standard", true);
            t.label = "Sp" + std::to_string(2 * dual_type.rank);
            return t;
        case SimpleType::B:
            if (dual_type.rank == 3) {
                set({SimpleType::G, 2}, "V7", true);
                t.label = "G2";
            } else if (dual_type.rank == 2) {
                set({SimpleType::C, 2}, "standard", true);
                t.label = "Sp4";
            } else {
                set(dual_type, "vector", true);
                t.label = "SO" + std::to_string(2 * dual_type.rank + 1);
            }
            return t;
        case SimpleType::D:
            if (dual_type.rank == 4) {
                set({SimpleType::G, 2}, "V7", true);
                t.label = "G2";
            } else {
                set({SimpleType::B, dual_type.rank - 1}, "vector", true);
                t.label = "SO" + std::to_string(2 * dual_type.rank - 1);
            }
            return t;
        case SimpleType::E:
            if (dual_type.rank == 6) {
                set({SimpleType::F, 4}, "adjoint", false);
            } else {
                set(dual_type, "adjoint", false);
            }
            return t;
        case SimpleType::F:
            set({SimpleType::F, 4}, "adjoint", false);
            return t;
        case SimpleType::G:
            set({SimpleType::G, 2}, "V7", true);
            return t;
    }
    throw Unlisted("no monodromy listed for " + dual_type.str());
}

inline MonodromyTarget parse_target(const std::string& s) {
    if (s == "G2" || s == "g2") {
        MonodromyTarget t;
        t.label = "G2";
        t.rep = "V7";
        t.group_type = {SimpleType::G, 2};
        return t;
    }
    auto num = [&s](std::size_t off) { return std::atoi(s.c_str() + off); };
    MonodromyTarget t;
    if (s.rfind("Sp", 0) == 0) {
        int n = num(2);
        if (n < 2 || n % 2) throw Unlisted("bad symplectic label " + s);
        t.label = s;
        t.rep = "standard";
        t.group_type = n == 2 ? TypeLabel{SimpleType::A, 1} : TypeLabel{SimpleType::C, n / 2};
        return t;
    }
    if (s.rfind("SL", 0) == 0) {
        int n = num(2);
        if (n < 2) throw Unlisted("bad special-linear label " + s);
        t.label = s;
        t.rep = "standard";
        t.group_type = {SimpleType::A, n - 1};
        t.self_dual = n == 2;
        return t;
    }
    if (s.rfind("SO", 0) == 0) {
        int n = num(2);
        if (n < 5 || n % 2 == 0) throw Unlisted("bad orthogonal label " + s);
        t.label = s;
        t.rep = "vector";
        t.group_type = {SimpleType::B, (n - 1) / 2};
        return t;
    }
    throw Unlisted("unknown target label '" + s + "'");
}

inline WeightMultiset target_multiset(const MonodromyTarget& t) {
    RootSystem rs = RootSystem::build(t.group_type);
    if (t.rep == "standard" || t.rep == "vector" || t.rep == "V7") return standard_rep(rs);
    if (t.rep == "adjoint") return adjoint_rep(rs);
    throw Error("no weight data for representation '" + t.rep + "'");
}

// ---- empirical statistics ----

// m_k = (1/(q-1)) sum_a t(a)^k for k = 0..kmax, ordered fixed-chunk
// accumulation so results are identical across thread counts
inline std::vector<std::complex<double>> empirical_moments(const SumTable& table, int kmax) {
    if (!table.normalized) throw Error("moments want the weight-zero normalization");
    long long m = static_cast<long long>(table.values.size());
    std::vector<std::complex<double>> acc(static_cast<std::size_t>(kmax + 1), {0.0, 0.0});
    constexpr long long kChunk = 4096;
    for (long long lo = 0; lo < m; lo += kChunk) {
        long long hi = std::min(lo + kChunk, m);
        std::vector<std::complex<double>> part(static_cast<std::size_t>(kmax + 1), {0.0, 0.0});
        for (long long i = lo; i < hi; ++i) {
            std::complex<double> t{1.0, 0.0};
            const std::complex<double> v = table.values[static_cast<std::size_t>(i)];
            for (int k = 0; k <= kmax; ++k) {
                part[static_cast<std::size_t>(k)] += t;
                t *= v;
            }
        }
        for (int k = 0; k <= kmax; ++k) acc[static_cast<std::size_t>(k)] += part[static_cast<std::size_t>(k)];
    }
    for (auto& v : acc) v /= static_cast<double>(m);
    return acc;
}

// m_{a,b} = (1/(q-1)) sum t^a conj(t)^b for a+b <= kmax
inline std::vector<std::vector<std::complex<double>>> empirical_mixed_moments(const SumTable& table, int kmax) {
    if (!table.normalized) throw Error("moments want the weight-zero normalization");
    long long m = static_cast<long long>(table.values.size());
    std::vector<std::vector<std::complex<double>>> acc(static_cast<std::size_t>(kmax + 1));
    for (int a = 0; a <= kmax; ++a) acc[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(kmax + 1 - a), {0.0, 0.0});
    constexpr long long kChunk = 4096;
    for (long long lo = 0; lo < m; lo += kChunk) {
        long long hi = std::min(lo + kChunk, m);
        auto part = acc;
        for (auto& row : part) std::fill(row.begin(), row.end(), std::complex<double>{0.0, 0.0});
        for (long long i = lo; i < hi; ++i) {
            const std::complex<double> v = table.values[static_cast<std::size_t>(i)];
            const std::complex<double> w = std::conj(v);
            std::complex<double> va{1.0, 0.0};
            for (int a = 0; a <= kmax; ++a) {
                std::complex<double> vb = va;
                for (int b = 0; a + b <= kmax; ++b) {
                    part[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += vb;
                    vb *= w;
                }
                va *= v;
            }
        }
        for (int a = 0; a <= kmax; ++a)
            for (int b = 0; a + b <= kmax; ++b)
                acc[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += part[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    for (auto& row : acc)
        for (auto& v : row) v /= static_cast<double>(m);
    return acc;
}

struct MomentReport {
    int k = 0;          // plain moment index, or a for mixed
    int b = -1;         // -1 for plain moments, else conjugate power
    std::complex<double> empirical;
    long long theoretical = 0;
    double tolerance = 0.0;
    bool pass = false;
};

// empirical moments of the table against the Haar moments of the target;
// tolerance = A/sqrt(q) plus a fixed rounding allowance
inline std::vector<MomentReport> compare(const SumTable& table, const MonodromyTarget& target, int kmax,
                                         double tolerance_a = 10.0) {
    if (!target.moments_available)
        throw Unlisted("no computable moment oracle for target " + target.label);
    SumTable norm = table.normalized ? table : table.normalized_copy();
    double q = static_cast<double>(table.spec.field.q());
    double tol = tolerance_a / std::sqrt(q) + 1e-6;
    WeightMultiset V = target_multiset(target);
    std::vector<MomentReport> out;
    if (target.self_dual) {
        auto emp = empirical_moments(norm, kmax);
        for (int k = 0; k <= kmax; ++k) {
            MomentReport r;
            r.k = k;
            r.empirical = emp[static_cast<std::size_t>(k)];
            r.theoretical = invariant_moment(V, k);
            r.tolerance = tol;
            r.pass = std::abs(r.empirical - static_cast<double>(r.theoretical)) <= tol;
            out.push_back(r);
        }
    } else {
        auto emp = empirical_mixed_moments(norm, kmax);
        for (int a = 0; a <= kmax; ++a)
            for (int b = 0; a + b <= kmax; ++b) {
                MomentReport r;
                r.k = a;
                r.b = b;
                r.empirical = emp[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                r.theoretical = mixed_moment(V, a, b);
                r.tolerance = tol;
                r.pass = std::abs(r.empirical - static_cast<double>(r.theoretical)) <= tol;
                out.push_back(r);
            }
    }
    return out;
}

// ---- Sato-Tate angle statistics ----

inline double sato_tate_cdf(double theta) {
    return (2.0 / std::numbers::pi) * (theta / 2.0 - std::sin(2.0 * theta) / 4.0);
}

struct AngleStatistics {
    std::vector<long> histogram;
    double ks = 0.0;
    double ks_bound = 0.0;
    bool pass = false;
};

inline AngleStatistics angle_statistics_from_values(std::vector<double> thetas, double tolerance_b, int bins = 40) {
    AngleStatistics st;
    st.histogram.assign(static_cast<std::size_t>(bins), 0);
    for (double t : thetas) {
        int b = static_cast<int>(t / std::numbers::pi * bins);
        b = std::clamp(b, 0, bins - 1);
        ++st.histogram[static_cast<std::size_t>(b)];
    }
    std::sort(thetas.begin(), thetas.end());
    double n = static_cast<double>(thetas.size());
    double d = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        double f = sato_tate_cdf(thetas[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    st.ks = d;
    st.ks_bound = tolerance_b / std::sqrt(n);
    st.pass = st.ks <= st.ks_bound;
    return st;
}

inline AngleStatistics angle_statistics(const SumTable& table2, double tolerance_b = 3.0, int bins = 40) {
    SumTable norm = table2.normalized ? table2 : table2.normalized_copy();
    std::vector<double> thetas;
    thetas.reserve(norm.values.size());
    for (long long j = 0; j < static_cast<long long>(norm.values.size()); ++j)
        thetas.push_back(angle(norm, FieldElement{static_cast<std::int32_t>(j)}));
    return angle_statistics_from_values(std::move(thetas), tolerance_b, bins);
}

}  // namespace kl
