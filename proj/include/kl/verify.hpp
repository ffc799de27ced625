#pragma once

#include <charconv>
#include <chrono>
#include <string>
#include <vector>

#include "kl/equidist.hpp"
#include "kl/eulerchar.hpp"
#include "kl/sums.hpp"
#include "kl/wildmono.hpp"

namespace kl::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // deterministic across runs; no timings in here
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    std::string report;  // canonical serialization of all criteria
};

namespace detail_verify {

inline std::string fmt(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline std::string fmt(std::complex<double> v) {
    return fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i";
}

inline std::vector<std::pair<long, int>> prime_powers_up_to(long long bound) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p <= bound; ++p) {
        if (!kl::detail::is_prime(p)) continue;
        long long q = p;
        int k = 1;
        while (q <= bound) {
            out.push_back({p, k});
            q *= p;
            ++k;
        }
    }
    return out;
}

inline std::vector<long> smallest_good_primes(const RootSystem& rs, int count) {
    std::vector<long> out;
    long long w = rs.weyl_order();
    for (long p = 2; static_cast<int>(out.size()) < count; ++p)
        if (kl::detail::is_prime(p) && w % p != 0) out.push_back(p);
    return out;
}

}  // namespace detail_verify

// criterion 1 + the suite-table half of criterion 2 share one sweep
struct OracleSweep {
    long specs_checked = 0;
    double max_scaled_deviation = 0.0;
    double worst_weil_excess = -1.0;  // max over tables of (ratio - n)
    bool deviation_ok = true;
    bool weil_ok = true;
    double elapsed_seconds = 0.0;
};

inline OracleSweep run_oracle_sweep(const RunConfig& cfg) {
    using namespace detail_verify;
    OracleSweep s;
    auto t0 = std::chrono::steady_clock::now();
    Parallel pool(cfg.threads);
    for (auto [p, k] : prime_powers_up_to(64)) {
        Field f = Field::make(p, k, cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir);
        long long m = f.q() - 1;
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                Rng rng(cfg.seed * 0x9e3779b9ULL + static_cast<std::uint64_t>(f.q()) * 1000003ULL +
                        static_cast<std::uint64_t>(n) * 101ULL + static_cast<std::uint64_t>(trial));
                std::vector<FieldElement> coeffs;
                std::vector<long long> chi;
                for (int i = 0; i < n; ++i) {
                    coeffs.push_back(FieldElement{static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(m)))});
                    chi.push_back(static_cast<long long>(rng.below(static_cast<std::uint64_t>(m))));
                }
                auto spec = KloostermanSpec::make(f, n, coeffs, chi);
                SumTable naive = table_naive(spec, pool, cfg.budget);
                SumTable conv = table_convolution(spec);
                double scale = naive.weight_scale();
                double dev = 0.0;
                for (std::size_t i = 0; i < naive.values.size(); ++i)
                    dev = std::max(dev, std::abs(naive.values[i] - conv.values[i]));
                dev /= scale;
                s.max_scaled_deviation = std::max(s.max_scaled_deviation, dev);
                if (dev > 1e-9) s.deviation_ok = false;
                double excess = weil_report(naive).max_ratio - static_cast<double>(n);
                s.worst_weil_excess = std::max(s.worst_weil_excess, excess);
                if (excess > 1e-6) s.weil_ok = false;
                ++s.specs_checked;
            }
        }
    }
    s.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

inline std::vector<CriterionResult> run_criteria(const RunConfig& cfg) {
    using namespace detail_verify;
    std::vector<CriterionResult> out;
    std::string cache = cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir;

    // 1: naive vs convolution across every prime power q <= 64, n <= 4
    OracleSweep sweep = run_oracle_sweep(cfg);
    {
        CriterionResult c{1, "sum_oracle_equivalence", false, ""};
        bool runtime_ok = sweep.elapsed_seconds < 30.0;
        c.pass = sweep.deviation_ok && runtime_ok;
        c.detail = "specs=" + std::to_string(sweep.specs_checked) +
                   " max_scaled_deviation=" + fmt(sweep.max_scaled_deviation) +
                   " tolerance=1e-09 runtime_within_30s=" + (runtime_ok ? "yes" : "no");
        out.push_back(c);
    }

    // 2: Weil bound on every suite table, Kl_2 for p <= 200, Kl_3 for p <= 50
    {
        CriterionResult c{2, "weil_bound", false, ""};
        double worst2 = -1.0, worst3 = -1.0;
        for (long p = 2; p <= 200; ++p) {
            if (!kl::detail::is_prime(p)) continue;
            Field f = Field::make(p, 1, cache);
            worst2 = std::max(worst2, weil_report(table_convolution(KloostermanSpec::make(f, 2))).max_ratio - 2.0);
        }
        for (long p = 2; p <= 50; ++p) {
            if (!kl::detail::is_prime(p)) continue;
            Field f = Field::make(p, 1, cache);
            worst3 = std::max(worst3, weil_report(table_convolution(KloostermanSpec::make(f, 3))).max_ratio - 3.0);
        }
        c.pass = sweep.weil_ok && worst2 <= 1e-6 && worst3 <= 1e-6;
        c.detail = "sweep_worst_excess=" + fmt(sweep.worst_weil_excess) + " kl2_worst_excess=" + fmt(worst2) +
                   " kl3_worst_excess=" + fmt(worst3);
        out.push_back(c);
    }

    // 3: Sato-Tate for Kl_2 at q = 10007: KS and the first eight moments
    {
        CriterionResult c{3, "sato_tate_kl2_q10007", false, ""};
        Field f = Field::make(10007, 1, cache);
        SumTable t = table_convolution(KloostermanSpec::make(f, 2)).normalized_copy();
        bool weil_ok = weil_report(t).pass;
        AngleStatistics st = angle_statistics(t, cfg.tolerance_b);
        auto m = empirical_moments(t, 8);
        const long long want[9] = {1, 0, 1, 0, 2, 0, 5, 0, 14};
        double tol = cfg.tolerance_a / std::sqrt(10007.0);
        bool moments_ok = true;
        std::string worst;
        double worst_err = -1.0;
        for (int k = 1; k <= 8; ++k) {
            double err = std::abs(m[static_cast<std::size_t>(k)] - static_cast<double>(want[k]));
            if (err > tol) moments_ok = false;
            if (err > worst_err) {
                worst_err = err;
                worst = "m" + std::to_string(k) + "=" + fmt(m[static_cast<std::size_t>(k)].real());
            }
        }
        c.pass = st.pass && moments_ok && weil_ok;
        c.detail = "ks=" + fmt(st.ks) + " ks_bound=" + fmt(st.ks_bound) + " moment_tolerance=" + fmt(tol) +
                   " worst_moment_err=" + fmt(worst_err) + " at " + worst + " weil_ok=" + (weil_ok ? "yes" : "no");
        out.push_back(c);
    }

    // 4: G2 detection for Kl_7 at q = 2^13, and rejection of the SO7 hypothesis
    {
        CriterionResult c{4, "g2_detection_kl7_q8192", false, ""};
        WeightMultiset v7 = quasi_minuscule(RootSystem::build(SimpleType::G, 2));
        WeightMultiset so7 = standard_rep(RootSystem::build(SimpleType::B, 3));
        bool oracle_ok = invariant_moment(v7, 2) == 1 && invariant_moment(v7, 3) == 1 &&
                         invariant_moment(v7, 4) == 4 && invariant_moment(so7, 4) == 3;
        Field f = Field::make(2, 13, cache);
        SumTable t = table_convolution(KloostermanSpec::make(f, 7)).normalized_copy();
        bool weil_ok = weil_report(t).pass;
        auto m = empirical_moments(t, 4);
        double tol = cfg.tolerance_a / std::sqrt(8192.0);
        double e2 = std::abs(m[2] - 1.0), e3 = std::abs(m[3] - 1.0), e4 = std::abs(m[4] - 4.0);
        double so7_margin = std::abs(m[4] - 3.0);
        c.pass = oracle_ok && weil_ok && e2 <= tol && e3 <= tol && e4 <= tol && so7_margin > 0.5;
        c.detail = "m2=" + fmt(m[2].real()) + " m3=" + fmt(m[3].real()) + " m4=" + fmt(m[4].real()) +
                   " tolerance=" + fmt(tol) + " so7_margin=" + fmt(so7_margin);
        out.push_back(c);
    }

    // 5: SU(3) mixed moments for Kl_3 at q = 5^4
    {
        CriterionResult c{5, "su3_mixed_moments_kl3_q625", false, ""};
        WeightMultiset std3 = standard_rep(RootSystem::build(SimpleType::A, 2));
        bool oracle_ok = mixed_moment(std3, 1, 1) == 1 && mixed_moment(std3, 3, 0) == 1 && mixed_moment(std3, 2, 1) == 0;
        Field f = Field::make(5, 4, cache);
        SumTable t = table_convolution(KloostermanSpec::make(f, 3)).normalized_copy();
        bool weil_ok = weil_report(t).pass;
        auto mm = empirical_mixed_moments(t, 3);
        double tol = cfg.tolerance_a / 25.0;
        double e11 = std::abs(mm[1][1] - 1.0), e30 = std::abs(mm[3][0] - 1.0), e21 = std::abs(mm[2][1]);
        c.pass = oracle_ok && weil_ok && e11 <= tol && e30 <= tol && e21 <= tol;
        c.detail = "m11=" + fmt(mm[1][1]) + " m30=" + fmt(mm[3][0]) + " m21=" + fmt(mm[2][1]) +
                   " tolerance=" + fmt(tol);
        out.push_back(c);
    }

    // 6: quasi-minuscule combinatorics, exact, every type of rank <= 8
    {
        CriterionResult c{6, "quasi_minuscule_combinatorics", false, ""};
        long types = 0;
        bool ok = true;
        for (const auto& lbl : all_simple_types(8)) {
            RootSystem rs = RootSystem::build(lbl);
            WeightMultiset qm = quasi_minuscule(rs);
            std::vector<int> zero(static_cast<std::size_t>(rs.rank), 0);
            auto strings = principal_strings(qm);
            long sum_l = 0;
            for (long l : strings) sum_l += l;
            bool type_ok = qm.weights.at(zero) == rs.r_s &&
                           static_cast<long>(strings.size()) == rs.r_s &&
                           rs.num_short_roots() == rs.h * rs.r_s &&
                           2 * sum_l == static_cast<long>(rs.h) * rs.r_s &&
                           static_cast<int>(rs.roots.size()) == rs.rank * rs.h;
            ok = ok && type_ok;
            ++types;
        }
        c.pass = ok;
        c.detail = "types_checked=" + std::to_string(types) + " all_exact=" + (ok ? "yes" : "no");
        out.push_back(c);
    }

    // 7: Euler-characteristic censuses
    {
        CriterionResult c{7, "euler_characteristic_censuses", false, ""};
        bool ok = true;
        long censuses = 0;
        for (const auto& lbl : all_simple_types(8)) {
            RootSystem rs = RootSystem::build(lbl);
            CensusReport q = qm_census(rs);
            ok = ok && q.matches_theorem && q.predicted_minus_chi == rs.r_l;
            ++censuses;
            if (lbl.type == SimpleType::B || lbl.type == SimpleType::C || lbl.type == SimpleType::F) {
                CensusReport a = adjoint_census(rs);
                ok = ok && a.matches_theorem && a.predicted_minus_chi == rs.rank;
                ++censuses;
            }
        }
        CensusReport g2 = g2_census();
        ok = ok && g2.case_counts.at("short_roots_no_simple") == 3 && g2.case_counts.at("long_roots_no_simple") == 1 &&
             g2.case_counts.at("flag_chi_gamma") == 6 && g2.case_counts.at("chi_gamma_stratum") == -1 &&
             g2.case_counts.at("chi_subregular_stratum") == 0 && g2.predicted_minus_chi == 2;
        ++censuses;
        c.pass = ok;
        c.detail = "censuses=" + std::to_string(censuses) + " all_match=" + (ok ? "yes" : "no");
        out.push_back(c);
    }

    // 8: simple wild parameters for every type and its three smallest good primes
    {
        CriterionResult c{8, "simple_wild_parameters", false, ""};
        bool ok = true;
        long cases = 0;
        for (const auto& lbl : all_simple_types(8)) {
            RootSystem rs = RootSystem::build(lbl);
            for (long p : smallest_good_primes(rs, 3)) {
                WildParameter wp = wild_construct(rs, p, cfg.seed);
                bool case_ok = static_cast<int>(wp.t_zeta_basis.size()) == wp.d &&
                               wp.factors[static_cast<std::size_t>(wp.chosen)].second == 1 &&
                               roots_nontrivial_on_tzeta(wp) && swan_from_breaks(wp).swan == rs.rank &&
                               swan_from_breaks(wp).dim_wild_invariants == rs.rank && cox_tame_no_invariants(rs);
                for (std::size_t qi = 0; qi < wp.qualifying.size(); ++qi)
                    case_ok = case_ok && swan_for_factor(wp, static_cast<int>(qi)).swan == rs.rank;
                ok = ok && case_ok;
                ++cases;
            }
        }
        c.pass = ok;
        c.detail = "type_prime_pairs=" + std::to_string(cases) + " all_verified=" + (ok ? "yes" : "no");
        out.push_back(c);
    }

    // 9: principal PGL2 exclusion
    {
        CriterionResult c{9, "principal_pgl2_exclusion", false, ""};
        auto a2 = pgl2_swan_bound(RootSystem::build(SimpleType::A, 2), 3);
        bool ok = a2.bound == 3 && a2.r_s == 2 && a2.excluded;
        long cases = 1;
        for (const auto& lbl : all_simple_types(8)) {
            if (lbl.rank < 2) continue;
            for (long p : {5L, 7L}) {
                ok = ok && pgl2_swan_bound(RootSystem::build(lbl), p).excluded;
                ++cases;
            }
        }
        c.pass = ok;
        c.detail = "a2_p3_bound=" + std::to_string(a2.bound) + " cases=" + std::to_string(cases) +
                   " all_excluded=" + (ok ? "yes" : "no");
        out.push_back(c);
    }

    return out;
}

inline std::string serialize(const std::vector<CriterionResult>& criteria) {
    std::string s;
    for (const auto& c : criteria) {
        s += "criterion " + std::to_string(c.id) + " " + c.name + ": " + (c.pass ? "PASS" : "FAIL") + " | " +
             c.detail + "\n";
    }
    return s;
}

// full suite: criteria 1-9, then determinism (10) established by re-running
// 1-9 and comparing the canonical serializations byte for byte
inline SuiteResult run_suite(const RunConfig& cfg) {
    SuiteResult res;
    res.criteria = run_criteria(cfg);
    std::string first = serialize(res.criteria);
    std::vector<CriterionResult> again = run_criteria(cfg);
    std::string second = serialize(again);
    CriterionResult det{10, "determinism", first == second, ""};
    det.detail = std::string("rerun_report_identical=") + (det.pass ? "yes" : "no") +
                 " bytes=" + std::to_string(first.size());
    res.criteria.push_back(det);
    res.all_pass = true;
    for (const auto& c : res.criteria) res.all_pass = res.all_pass && c.pass;
    res.report = serialize(res.criteria);
    return res;
}

}  // namespace kl::verify
