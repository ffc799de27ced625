// kl: Kloosterman sums over finite fields and the Lie-theoretic combinatorics
// of their monodromy. Subcommands cover the sum engine (sum, table, weil,
// angles, moments), the combinatorial side (roots, moments-theory, census,
// wild), and the full verification suite (verify-all).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kl/equidist.hpp"
#include "kl/eulerchar.hpp"
#include "kl/sums.hpp"
#include "kl/verify.hpp"
#include "kl/wildmono.hpp"

using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    long p = 0;
    int k = 1;
    std::string cache_dir;
    long long budget = 1000000000;
    double tol_a = 10.0;
    double tol_b = 3.0;
    int threads = 0;
    std::string out;
    std::string format = "json";
};

void emit(const GlobalOpts& g, const json& doc, const std::string& csv = "") {
    std::string text = (g.format == "csv" && !csv.empty()) ? csv : doc.dump(2) + "\n";
    if (g.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(g.out, std::ios::binary);
        f << text;
    }
}

kl::Field make_field(const GlobalOpts& g) {
    std::string dir = g.cache_dir.empty() ? kl::default_cache_dir() : g.cache_dir;
    return kl::Field::make(g.p, g.k, dir);
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

kl::KloostermanSpec make_spec(const kl::Field& f, int n, const std::string& coeffs_csv, const std::string& chi_csv) {
    std::vector<kl::FieldElement> coeffs;
    if (!coeffs_csv.empty())
        for (long long c : parse_int_list(coeffs_csv)) coeffs.push_back(f.from_index(c));
    std::vector<long long> chi;
    if (!chi_csv.empty()) chi = parse_int_list(chi_csv);
    return kl::KloostermanSpec::make(f, n, coeffs, chi);
}

json spec_json(const kl::KloostermanSpec& spec) {
    json j;
    j["p"] = spec.field.p();
    j["k"] = spec.field.k();
    j["n"] = spec.n;
    json coeffs = json::array(), chi = json::array();
    for (auto c : spec.coeffs) coeffs.push_back(spec.field.to_index(c));
    for (auto e : spec.char_exponents) chi.push_back(e);
    j["coeffs"] = coeffs;
    j["chi"] = chi;
    return j;
}

json table_json(const kl::SumTable& t) {
    json j = spec_json(t.spec);
    j["normalized"] = t.normalized;
    json values = json::array();
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        values.push_back(json{{"a", static_cast<long long>(i)}, {"re", t.values[i].real()}, {"im", t.values[i].imag()}});
    }
    j["values"] = values;
    return j;
}

std::string table_csv(const kl::SumTable& t) {
    std::string s = "a,re,im\n";
    char buf[96];
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, t.values[i].real(), t.values[i].imag());
        s += buf;
    }
    return s;
}

json census_json(const kl::CensusReport& r) {
    json j;
    j["type"] = r.type_label;
    j["rep"] = r.rep;
    json counts;
    for (const auto& [k, v] : r.case_counts) counts[k] = v;
    j["case_counts"] = counts;
    j["predicted_minus_chi"] = r.predicted_minus_chi;
    j["matches_theorem"] = r.matches_theorem;
    j["good_char_required"] = r.good_char_required;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kloosterman sums over finite fields and their monodromy statistics"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--cache-dir", g.cache_dir, "Zech table cache directory (default KL_CACHE_DIR or .kl-cache)");
    app.add_option("--budget", g.budget, "multiply-add budget for naive table construction");
    app.add_option("--tolerance-a", g.tol_a, "moment tolerance numerator A in A/sqrt(q)");
    app.add_option("--tolerance-b", g.tol_b, "KS tolerance numerator B in B/sqrt(q-1)");
    app.add_option("--threads", g.threads, "worker threads (default KL_THREADS or hardware)");

    // field
    auto* cmd_field = app.add_subcommand("field", "construct a finite field and report its tables");
    cmd_field->add_option("--p", g.p, "characteristic")->required();
    cmd_field->add_option("--k", g.k, "extension degree");
    cmd_field->add_option("--out", g.out, "write JSON here instead of stdout");

    // sum
    long long arg_a = 1;
    int arg_n = 2;
    std::string arg_coeffs, arg_chi, arg_method = "auto", arg_target = "auto", arg_rep = "qm", arg_type = "A1";
    bool arg_normalized = false, arg_ks = false;
    int arg_kmax = 6, arg_bins = 40;
    auto* cmd_sum = app.add_subcommand("sum", "evaluate one Kloosterman sum");
    cmd_sum->add_option("--p", g.p)->required();
    cmd_sum->add_option("--k", g.k);
    cmd_sum->add_option("--n", arg_n);
    cmd_sum->add_option("--a", arg_a, "evaluation point as a base-p digit index")->required();
    cmd_sum->add_option("--coeffs", arg_coeffs, "linear form coefficients c1,..,cn (digit indices)");
    cmd_sum->add_option("--chi", arg_chi, "multiplicative character exponents m1,..,mn");
    cmd_sum->add_option("--out", g.out);

    // table
    auto* cmd_table = app.add_subcommand("table", "build the full table a -> Kl(a)");
    cmd_table->add_option("--p", g.p)->required();
    cmd_table->add_option("--k", g.k);
    cmd_table->add_option("--n", arg_n);
    cmd_table->add_option("--coeffs", arg_coeffs);
    cmd_table->add_option("--chi", arg_chi);
    cmd_table->add_option("--method", arg_method, "naive | conv | auto");
    cmd_table->add_flag("--normalized", arg_normalized, "divide by q^{(n-1)/2}");
    cmd_table->add_option("--format", g.format, "json | csv");
    cmd_table->add_option("--out", g.out);

    // weil
    auto* cmd_weil = app.add_subcommand("weil", "max |Kl|/q^{(n-1)/2} against the purity bound");
    cmd_weil->add_option("--p", g.p)->required();
    cmd_weil->add_option("--k", g.k);
    cmd_weil->add_option("--n", arg_n);
    cmd_weil->add_option("--coeffs", arg_coeffs);
    cmd_weil->add_option("--chi", arg_chi);
    cmd_weil->add_option("--out", g.out);

    // angles
    auto* cmd_angles = app.add_subcommand("angles", "Kloosterman angle histogram and KS statistic");
    cmd_angles->add_option("--p", g.p)->required();
    cmd_angles->add_option("--k", g.k);
    cmd_angles->add_flag("--ks", arg_ks, "include the Kolmogorov-Smirnov verdict");
    cmd_angles->add_option("--bins", arg_bins);
    cmd_angles->add_option("--format", g.format);
    cmd_angles->add_option("--out", g.out);

    // moments
    auto* cmd_moments = app.add_subcommand("moments", "empirical vs theoretical trace moments");
    cmd_moments->add_option("--p", g.p)->required();
    cmd_moments->add_option("--k", g.k);
    cmd_moments->add_option("--n", arg_n);
    cmd_moments->add_option("--coeffs", arg_coeffs);
    cmd_moments->add_option("--chi", arg_chi);
    cmd_moments->add_option("--target", arg_target, "auto | Sp2k | SLn | SOn | G2");
    cmd_moments->add_option("--kmax", arg_kmax);
    cmd_moments->add_option("--format", g.format);
    cmd_moments->add_option("--out", g.out);

    // moments-theory
    auto* cmd_mth = app.add_subcommand("moments-theory", "Haar moments of a dual-group representation");
    cmd_mth->add_option("--type", arg_type, "simple type label, e.g. G2")->required();
    cmd_mth->add_option("--rep", arg_rep, "qm | adjoint | std");
    cmd_mth->add_option("--kmax", arg_kmax);
    cmd_mth->add_option("--out", g.out);

    // roots
    auto* cmd_roots = app.add_subcommand("roots", "root system data for a simple type");
    cmd_roots->add_option("--type", arg_type)->required();
    cmd_roots->add_option("--out", g.out);

    // census
    auto* cmd_census = app.add_subcommand("census", "Euler-characteristic root census");
    cmd_census->add_option("--type", arg_type)->required();
    cmd_census->add_option("--rep", arg_rep, "qm | adjoint");
    cmd_census->add_option("--out", g.out);

    // wild
    auto* cmd_wild = app.add_subcommand("wild", "wild inertia parameter at infinity");
    cmd_wild->add_option("--type", arg_type)->required();
    cmd_wild->add_option("--p", g.p, "residue characteristic")->required();
    cmd_wild->add_option("--out", g.out);

    // verify-all
    auto* cmd_verify = app.add_subcommand("verify-all", "run the complete verification suite");
    cmd_verify->add_option("--out", g.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_field) {
            kl::Field f = make_field(g);
            json j;
            j["p"] = f.p();
            j["k"] = f.k();
            j["q"] = f.q();
            j["modulus"] = f.modulus();
            j["generator_index"] = kl::Field::generator_index;
            j["generator_value"] = f.to_index(f.gen());
            j["zech_entries"] = f.q() - 1;
            j["cache_file"] = kl::Field::cache_file_name(f.p(), f.k());
            emit(g, j);
        } else if (*cmd_sum) {
            kl::Field f = make_field(g);
            auto spec = make_spec(f, arg_n, arg_coeffs, arg_chi);
            auto v = kl::kloosterman(spec, f.from_index(arg_a));
            json j = spec_json(spec);
            j["a"] = arg_a;
            j["re"] = v.real();
            j["im"] = v.imag();
            emit(g, j);
        } else if (*cmd_table) {
            kl::Field f = make_field(g);
            auto spec = make_spec(f, arg_n, arg_coeffs, arg_chi);
            kl::SumTable t;
            if (arg_method == "naive")
                t = kl::table_naive(spec, kl::Parallel(g.threads), g.budget);
            else
                t = kl::table_convolution(spec);
            if (arg_normalized) t = t.normalized_copy();
            emit(g, table_json(t), table_csv(t));
        } else if (*cmd_weil) {
            kl::Field f = make_field(g);
            auto spec = make_spec(f, arg_n, arg_coeffs, arg_chi);
            auto r = kl::weil_report(kl::table_convolution(spec));
            json j = spec_json(spec);
            j["max_ratio"] = r.max_ratio;
            j["bound"] = spec.n;
            j["argmax_log"] = r.argmax_log;
            j["pass"] = r.pass;
            emit(g, j);
            return r.pass ? 0 : 1;
        } else if (*cmd_angles) {
            kl::Field f = make_field(g);
            auto t = kl::table_convolution(kl::KloostermanSpec::make(f, 2)).normalized_copy();
            auto st = kl::angle_statistics(t, g.tol_b, arg_bins);
            json j;
            j["p"] = f.p();
            j["k"] = f.k();
            j["q"] = f.q();
            j["bins"] = st.histogram;
            j["ks"] = st.ks;
            j["ks_bound"] = st.ks_bound;
            j["pass"] = st.pass;
            std::string csv = "bin,count\n";
            for (std::size_t i = 0; i < st.histogram.size(); ++i)
                csv += std::to_string(i) + "," + std::to_string(st.histogram[i]) + "\n";
            emit(g, j, csv);
            return (!arg_ks || st.pass) ? 0 : 1;
        } else if (*cmd_moments) {
            kl::Field f = make_field(g);
            auto spec = make_spec(f, arg_n, arg_coeffs, arg_chi);
            kl::MonodromyTarget target = arg_target == "auto" ? kl::monodromy_target(arg_n, f.p())
                                                              : kl::parse_target(arg_target);
            auto t = kl::table_convolution(spec);
            auto reports = kl::compare(t, target, arg_kmax, g.tol_a);
            json j = spec_json(spec);
            j["q"] = f.q();
            j["target"] = target.label;
            j["rep"] = target.rep;
            j["mixed"] = !target.self_dual;
            j["note"] = "moments are tested in the defining representation only";
            bool all = true;
            json list = json::array();
            std::string csv = "k,b,emp_re,emp_im,theory,tolerance,pass\n";
            for (const auto& r : reports) {
                json e;
                e["k"] = r.k;
                if (r.b >= 0) e["b"] = r.b;
                e["empirical_re"] = r.empirical.real();
                e["empirical_im"] = r.empirical.imag();
                e["theoretical"] = r.theoretical;
                e["tolerance"] = r.tolerance;
                e["pass"] = r.pass;
                list.push_back(e);
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%lld,%.6g,%d\n", r.k, r.b, r.empirical.real(),
                              r.empirical.imag(), static_cast<long long>(r.theoretical), r.tolerance, r.pass ? 1 : 0);
                csv += buf;
                all = all && r.pass;
            }
            j["reports"] = list;
            j["all_pass"] = all;
            emit(g, j, csv);
            return all ? 0 : 1;
        } else if (*cmd_mth) {
            kl::RootSystem rs = kl::RootSystem::build(kl::parse_type(arg_type));
            kl::WeightMultiset V = (arg_rep == "adjoint" || arg_rep == "ad") ? kl::adjoint_rep(rs)
                                   : (arg_rep == "std" || arg_rep == "standard") ? kl::standard_rep(rs)
                                                                                 : kl::quasi_minuscule(rs);
            json j;
            j["type"] = rs.label.str();
            j["rep"] = arg_rep;
            j["dim"] = V.dim;
            json ms = json::array();
            for (int k = 0; k <= arg_kmax; ++k) ms.push_back(kl::invariant_moment(V, k));
            j["moments"] = ms;
            emit(g, j);
        } else if (*cmd_roots) {
            kl::RootSystem rs = kl::RootSystem::build(kl::parse_type(arg_type));
            json j;
            j["type"] = rs.label.str();
            j["rank"] = rs.rank;
            j["cartan"] = rs.cartan;
            j["h"] = rs.h;
            j["r_s"] = rs.r_s;
            j["r_l"] = rs.r_l;
            j["num_roots"] = rs.roots.size();
            j["weyl_order"] = rs.weyl_order();
            j["theta"] = json{{"coeffs", rs.theta().coeff}, {"coroot", rs.theta().coroot}};
            j["gamma"] = json{{"coeffs", rs.gamma().coeff}, {"coroot", rs.gamma().coroot}};
            json roots = json::array();
            for (const auto& r : rs.roots)
                roots.push_back(json{{"coeffs", r.coeff},
                                     {"coroot", r.coroot},
                                     {"height", r.height},
                                     {"long", r.is_long},
                                     {"short", r.is_short}});
            j["roots"] = roots;
            emit(g, j);
        } else if (*cmd_census) {
            kl::RootSystem rs = kl::RootSystem::build(kl::parse_type(arg_type));
            kl::CensusReport r = kl::census(rs, arg_rep);
            emit(g, census_json(r));
            return r.matches_theorem ? 0 : 1;
        } else if (*cmd_wild) {
            kl::RootSystem rs = kl::RootSystem::build(kl::parse_type(arg_type));
            kl::WildParameter wp = kl::wild_construct(rs, g.p);
            auto swan = kl::swan_from_breaks(wp);
            bool nontrivial = kl::roots_nontrivial_on_tzeta(wp);
            bool tame_ok = kl::cox_tame_no_invariants(rs);
            json j;
            j["type"] = rs.label.str();
            j["p"] = wp.p;
            j["weyl_order"] = wp.weyl_order;
            j["h"] = wp.h;
            j["d"] = wp.d;
            j["charpoly"] = wp.charpoly;
            json factors = json::array();
            for (std::size_t i = 0; i < wp.factors.size(); ++i) {
                bool qual = false;
                for (int qi : wp.qualifying) qual = qual || qi == static_cast<int>(i);
                factors.push_back(json{{"coeffs", wp.factors[i].first.c},
                                       {"multiplicity", wp.factors[i].second},
                                       {"qualifying", qual},
                                       {"chosen", static_cast<int>(i) == wp.chosen}});
            }
            j["charpoly_factors_mod_p"] = factors;
            j["t_zeta_dim"] = wp.t_zeta_basis.size();
            j["t_zeta_basis"] = wp.t_zeta_basis;
            j["roots_all_nontrivial_on_t_zeta"] = nontrivial;
            j["swan_adjoint"] = swan.swan;
            j["dim_wild_invariants"] = swan.dim_wild_invariants;
            j["cox_no_invariants"] = tame_ok;
            j["verdict_swan_equals_rank"] = swan.swan == rs.rank;
            emit(g, j);
            return (nontrivial && tame_ok && swan.swan == rs.rank) ? 0 : 1;
        } else if (*cmd_verify) {
            kl::RunConfig cfg;
            cfg.cache_dir = g.cache_dir;
            cfg.budget = g.budget;
            cfg.tolerance_a = g.tol_a;
            cfg.tolerance_b = g.tol_b;
            cfg.threads = g.threads;
            kl::verify::SuiteResult res = kl::verify::run_suite(cfg);
            if (g.out.empty()) {
                std::fputs(res.report.c_str(), stdout);
            } else {
                std::ofstream f(g.out, std::ios::binary);
                f << res.report;
            }
            std::fprintf(stderr, "%s\n", res.all_pass ? "all criteria passed" : "some criteria failed");
            return res.all_pass ? 0 : 1;
        }
    } catch (const kl::Error& e) {
        json j;
        j["error"] = e.what();
        std::fprintf(stderr, "%s\n", j.dump().c_str());
        return 1;
    }
    return 0;
}
