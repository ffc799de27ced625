#pragma once

#include <map>
#include <string>

#include "kl/repweights.hpp"
#include "kl/rootsys.hpp"

namespace kl {

// Root-census re-derivations of the Euler characteristics of the
// quasi-minuscule and adjoint Kloosterman local systems. Each census walks
// the root system, classifies strata exactly as the cohomological argument
// does, checks every counting identity the argument relies on, and reports
// -chi. A failed identity throws with the offending root named.
struct CensusReport {
    std::string type_label;
    std::string rep;                         // "quasi-minuscule" or "adjoint"
    std::map<std::string, long> case_counts;
    long predicted_minus_chi = 0;
    bool matches_theorem = false;
    bool good_char_required = false;  // adjoint statement needs good characteristic
};

namespace detail_census {

inline std::string root_str(const RootSystem& rs, int idx) {
    std::string s = "(";
    const auto& c = rs.roots[static_cast<std::size_t>(idx)].coeff;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

inline bool contains_simple(const RootSystem& rs, const std::vector<int>& idxs) {
    for (int i : idxs)
        if (rs.roots[static_cast<std::size_t>(i)].height == 1) return true;
    return false;
}

}  // namespace detail_census

// Stratum count over the long roots beta != -theta:
//   beta simple        -> contributes -1 to chi
//   beta positive, not simple, or negative -> contributes 0
// so -chi equals the number of long simple roots.
inline CensusReport qm_census(const RootSystem& rs) {
    CensusReport rep;
    rep.type_label = rs.label.str();
    rep.rep = "quasi-minuscule";
    long case_i = 0, case_ii = 0, case_iii = 0;
    std::vector<int> neg_theta = rs.negate(rs.theta().coeff);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const Root& beta = rs.roots[i];
        if (!beta.is_long) continue;
        if (beta.coeff == neg_theta) continue;
        if (beta.height == 1)
            ++case_ii;
        else if (beta.height > 0)
            ++case_i;
        else
            ++case_iii;
    }
    rep.case_counts["case_i_positive_nonsimple"] = case_i;
    rep.case_counts["case_ii_simple_long"] = case_ii;
    rep.case_counts["case_iii_negative"] = case_iii;
    rep.predicted_minus_chi = rs.r_l;
    rep.matches_theorem = case_ii == rs.r_l;
    if (!rep.matches_theorem)
        throw Internal("quasi-minuscule census: simple long count " + std::to_string(case_ii) +
                       " != long rank " + std::to_string(rs.r_l) + " for " + rs.label.str());
    return rep;
}

// Adjoint census for the doubly-laced types B, C, F4. For every short root
// beta, Phi^beta_2 = { alpha : <alpha, beta^vee> = 2 } is checked to be
// totally ordered by height, stable under alpha -> 2 beta - alpha with unique
// fixed point beta, and long away from beta; the stratum chi values then give
//   -chi(adjoint) = r_l + N_s = rank,
// where N_s counts the beta whose Phi^beta_2 meets a short simple root and
// N_l = r_l * #(W_theta-orbit of gamma) counts the long-simple hits.
inline CensusReport adjoint_census(const RootSystem& rs) {
    bool doubly_laced = (rs.label.type == SimpleType::B || rs.label.type == SimpleType::C ||
                         rs.label.type == SimpleType::F);
    if (!doubly_laced)
        throw WrongType("adjoint census applies to types B, C, F4 only; got " + rs.label.str());

    CensusReport rep;
    rep.type_label = rs.label.str();
    rep.rep = "adjoint";
    rep.good_char_required = true;

    long n_short = 0, with_simple = 0, without_simple = 0, n_s = 0, n_l = 0;
    for (std::size_t b = 0; b < rs.roots.size(); ++b) {
        const Root& beta = rs.roots[b];
        if (!beta.is_short) continue;
        ++n_short;
        auto phi2 = phi_level(rs, static_cast<int>(b), 2);

        // total order by height
        std::set<int> heights;
        for (int i : phi2) {
            if (!heights.insert(rs.roots[static_cast<std::size_t>(i)].height).second)
                throw Internal("Phi^beta_2 has a height tie at beta = " + detail_census::root_str(rs, static_cast<int>(b)));
        }
        // involution alpha -> 2 beta - alpha, order-reversing, fixed point beta only
        for (int i : phi2) {
            std::vector<int> img(static_cast<std::size_t>(rs.rank));
            for (int t = 0; t < rs.rank; ++t)
                img[static_cast<std::size_t>(t)] =
                    2 * beta.coeff[static_cast<std::size_t>(t)] - rs.roots[static_cast<std::size_t>(i)].coeff[static_cast<std::size_t>(t)];
            int j = rs.find_root(img);
            if (j < 0 || rs.pair_root_coroot(rs.roots[static_cast<std::size_t>(j)].coeff, beta.coroot) != 2)
                throw Internal("involution left Phi^beta_2 at beta = " + detail_census::root_str(rs, static_cast<int>(b)));
            bool fixed = j == i;
            if (fixed && rs.roots[static_cast<std::size_t>(i)].coeff != beta.coeff)
                throw Internal("involution has a spurious fixed point at beta = " +
                               detail_census::root_str(rs, static_cast<int>(b)));
        }
        // all members long except beta itself
        for (int i : phi2) {
            const Root& alpha = rs.roots[static_cast<std::size_t>(i)];
            if (alpha.coeff != beta.coeff && !alpha.is_long)
                throw Internal("short root " + detail_census::root_str(rs, i) + " in Phi^beta_2 of " +
                               detail_census::root_str(rs, static_cast<int>(b)));
        }

        long simple_count = 0;
        bool has_short_simple = false, has_long_simple = false;
        for (int i : phi2) {
            const Root& alpha = rs.roots[static_cast<std::size_t>(i)];
            if (alpha.height != 1) continue;
            ++simple_count;
            if (alpha.is_short) has_short_simple = true;
            if (alpha.is_long) has_long_simple = true;
        }
        if (simple_count > 1)
            throw Internal("Phi^beta_2 contains two simple roots at beta = " +
                           detail_census::root_str(rs, static_cast<int>(b)));
        if (has_short_simple && beta.height != 1)
            throw Internal("short simple in Phi^beta_2 but beta not simple at " +
                           detail_census::root_str(rs, static_cast<int>(b)));
        if (has_short_simple) ++n_s;
        if (has_long_simple) ++n_l;
        if (simple_count)
            ++with_simple;
        else
            ++without_simple;
    }

    long orbit_index = parabolic_orbit_index(rs);
    rep.case_counts["short_roots"] = n_short;
    rep.case_counts["phi2_with_simple"] = with_simple;
    rep.case_counts["phi2_without_simple"] = without_simple;
    rep.case_counts["n_s"] = n_s;
    rep.case_counts["n_l"] = n_l;
    rep.case_counts["theta_orbit_index"] = orbit_index;

    bool ok = n_s == rs.r_s && n_l == rs.r_l * orbit_index && with_simple == n_s + n_l &&
              with_simple - rs.r_l * orbit_index == rs.r_s;
    if (!ok) throw Internal("adjoint census identities failed for " + rs.label.str());
    rep.predicted_minus_chi = rs.r_l + n_s;  // = rank
    rep.matches_theorem = rep.predicted_minus_chi == rs.rank;
    return rep;
}

// G2 needs its own two-step resolution bookkeeping. Step I counts the short
// roots beta whose Phi^beta_{>=2} misses every simple root (there are 3) and
// solves 3 = 6 + 2 * (-1) + x for the gamma-stratum contribution x = -1;
// step II counts the long roots alpha whose Phi^alpha_{>=1} misses every
// simple root (only -theta) and solves 1 = 6 + 2 * (-1) + 3 * (-1) + y,
// so y = 0 and -chi(adjoint) = r_l + 1 = 2.
inline CensusReport g2_census() {
    RootSystem rs = RootSystem::build(SimpleType::G, 2);
    CensusReport rep;
    rep.type_label = "G2";
    rep.rep = "adjoint";
    rep.good_char_required = true;

    long short_no_simple = 0;
    for (std::size_t b = 0; b < rs.roots.size(); ++b) {
        if (!rs.roots[b].is_short) continue;
        if (!detail_census::contains_simple(rs, phi_at_least(rs, static_cast<int>(b), 2))) ++short_no_simple;
    }
    long long_no_simple = 0;
    for (std::size_t b = 0; b < rs.roots.size(); ++b) {
        if (!rs.roots[b].is_long) continue;
        if (!detail_census::contains_simple(rs, phi_at_least(rs, static_cast<int>(b), 1))) ++long_no_simple;
    }

    long flag_chi_gamma = static_cast<long>(weyl_orbit_roots(rs, rs.gamma().coeff).size());  // #W/W_gamma
    long flag_chi_theta = static_cast<long>(weyl_orbit_roots(rs, rs.theta().coeff).size());  // #W/W_theta
    const long p1_chi = 2;    // chi of the projective line fiber
    const long cone_chi = 3;  // chi of the projective cone fiber over P^1

    long qm_stratum_chi = -qm_census(rs).predicted_minus_chi;  // = -1
    // step I: strata of the subminimal resolution
    long x = short_no_simple - flag_chi_gamma - p1_chi * qm_stratum_chi;
    // step II: strata of the full adjoint resolution
    long y = long_no_simple - flag_chi_theta - p1_chi * x - cone_chi * qm_stratum_chi;

    rep.case_counts["short_roots_no_simple"] = short_no_simple;
    rep.case_counts["long_roots_no_simple"] = long_no_simple;
    rep.case_counts["flag_chi_gamma"] = flag_chi_gamma;
    rep.case_counts["flag_chi_theta"] = flag_chi_theta;
    rep.case_counts["chi_gamma_stratum"] = x;
    rep.case_counts["chi_subregular_stratum"] = y;

    bool ok = short_no_simple == 3 && long_no_simple == 1 && flag_chi_gamma == 6 && flag_chi_theta == 6 &&
              x == -1 && y == 0;
    if (!ok) throw Internal("G2 adjoint census failed");
    rep.predicted_minus_chi = rs.r_l - (x + y);  // 1 + 1
    rep.matches_theorem = rep.predicted_minus_chi == rs.rank;
    return rep;
}

// dispatcher used by the CLI and the verification suite
inline CensusReport census(const RootSystem& rs, const std::string& rep_name) {
    if (rep_name == "qm" || rep_name == "quasi-minuscule") return qm_census(rs);
    if (rep_name != "adjoint" && rep_name != "ad") throw Error("unknown representation '" + rep_name + "'");
    if (rs.label.type == SimpleType::G) return g2_census();
    if (rs.label.type == SimpleType::B || rs.label.type == SimpleType::C || rs.label.type == SimpleType::F)
        return adjoint_census(rs);
    // simply-laced: adjoint = quasi-minuscule
    CensusReport rep = qm_census(rs);
    rep.rep = "adjoint";
    return rep;
}

// Swan conductor at infinity predicted from the Euler characteristic via
// Grothendieck-Ogg-Shafarevich: r_s for the quasi-minuscule system, the rank
// for the adjoint one. `rs_dual` is the root system of the dual group; the
// cross-check runs the census on the other side of the duality.
inline long swan_prediction(const RootSystem& rs_dual, const std::string& rep_name) {
    if (rep_name == "qm" || rep_name == "quasi-minuscule") {
        long want = rs_dual.r_s;
        CensusReport c = qm_census(dual(rs_dual));
        if (c.predicted_minus_chi != want) throw Internal("Swan/census mismatch for " + rs_dual.label.str());
        return want;
    }
    if (rep_name == "adjoint" || rep_name == "ad") {
        long want = rs_dual.rank;
        CensusReport c = census(dual(rs_dual), "adjoint");
        if (c.predicted_minus_chi != want) throw Internal("Swan/census mismatch for " + rs_dual.label.str());
        return want;
    }
    throw Error("unknown representation '" + rep_name + "'");
}

}  // namespace kl
