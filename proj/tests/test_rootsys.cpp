#include <set>

#include "doctest.h"
#include "kl/rootsys.hpp"

using kl::RootSystem;
using kl::SimpleType;
using kl::TypeLabel;

TEST_CASE("basic counts for hand-checked types") {
    RootSystem g2 = RootSystem::build(SimpleType::G, 2);
    CHECK(g2.roots.size() == 12);
    CHECK(g2.h == 6);
    CHECK(g2.r_s == 1);
    CHECK(g2.r_l == 1);
    CHECK(g2.theta().coeff == std::vector<int>{3, 2});
    CHECK(g2.gamma().coeff == std::vector<int>{2, 1});

    RootSystem a2 = RootSystem::build(SimpleType::A, 2);
    CHECK(a2.roots.size() == 6);
    CHECK(a2.h == 3);
    CHECK(a2.theta().coeff == std::vector<int>{1, 1});

    RootSystem a1 = RootSystem::build(SimpleType::A, 1);
    CHECK(a1.roots.size() == 2);
    CHECK(a1.h == 2);

    RootSystem e8 = RootSystem::build(SimpleType::E, 8);
    CHECK(e8.roots.size() == 240);
    CHECK(e8.h == 30);
}

TEST_CASE("invalid types are rejected") {
    CHECK_THROWS_AS(RootSystem::build(SimpleType::B, 1), kl::InvalidType);
    CHECK_THROWS_AS(RootSystem::build(SimpleType::E, 9), kl::InvalidType);
    CHECK_THROWS_AS(RootSystem::build(SimpleType::D, 3), kl::InvalidType);
    CHECK_THROWS_AS(kl::parse_type("H4"), kl::InvalidType);
}

TEST_CASE("per-type structural invariants") {
    for (const auto& lbl : kl::all_simple_types(8)) {
        RootSystem rs = RootSystem::build(lbl);
        CAPTURE(lbl.str());
        int r = rs.rank;
        CHECK(static_cast<int>(rs.roots.size()) == r * rs.h);
        CHECK(rs.num_short_roots() == rs.h * rs.r_s);
        CHECK(rs.num_long_roots() == rs.h * rs.r_l);
        // <alpha, alpha^vee> = 2 everywhere
        for (std::size_t i = 0; i < rs.roots.size(); ++i)
            CHECK(rs.pair_root_coroot(rs.roots[i].coeff, rs.roots[i].coroot) == 2);
        // theta dominates every root coefficientwise
        for (const auto& root : rs.roots)
            for (int i = 0; i < r; ++i)
                CHECK(root.coeff[static_cast<std::size_t>(i)] <= rs.theta().coeff[static_cast<std::size_t>(i)]);
        // Coxeter element: order h
        auto cox = kl::coxeter_matrix(rs);
        CHECK(kl::matrix_order(cox) == rs.h);
        // weyl order = product of degrees; h = largest degree
        CHECK(rs.degrees.back() == rs.h);
        CHECK(rs.weyl_order() % rs.h == 0);
    }
}

TEST_CASE("pairing levels") {
    RootSystem g2 = RootSystem::build(SimpleType::G, 2);
    std::set<long> gamma_levels;
    for (std::size_t i = 0; i < g2.roots.size(); ++i)
        gamma_levels.insert(g2.pairing(static_cast<int>(i), g2.gamma_index));
    CHECK(gamma_levels == std::set<long>{-3, -2, -1, 0, 1, 2, 3});

    for (const auto& lbl : kl::all_simple_types(6)) {
        RootSystem rs = RootSystem::build(lbl);
        CAPTURE(lbl.str());
        // <alpha, theta^vee> in {0, +-1, +-2} with the extremes only at +-theta
        auto top = kl::phi_level(rs, rs.theta_index, 2);
        REQUIRE(top.size() == 1);
        CHECK(top[0] == rs.theta_index);
        CHECK(kl::phi_level(rs, rs.theta_index, 5).empty());
        // phi_level partitions the root set
        std::size_t total = 0;
        for (long lev = -5; lev <= 5; ++lev) total += kl::phi_level(rs, rs.theta_index, lev).size();
        CHECK(total == rs.roots.size());
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            if (static_cast<int>(i) == rs.theta_index) continue;
            long c = rs.pairing(static_cast<int>(i), rs.theta_index);
            if (rs.roots[i].coeff != rs.negate(rs.theta().coeff)) CHECK((c >= -1 && c <= 1));
        }
    }

    RootSystem a2 = RootSystem::build(SimpleType::A, 2);
    auto lvl1 = kl::phi_level(a2, a2.theta_index, 1);
    CHECK(lvl1.size() == 2);  // the two simple roots
    for (int idx : lvl1) CHECK(a2.roots[static_cast<std::size_t>(idx)].height == 1);

    // for long beta, level +-2 is hit only at +-beta
    for (const auto& lbl : {TypeLabel{SimpleType::B, 4}, TypeLabel{SimpleType::C, 3}, TypeLabel{SimpleType::F, 4},
                            TypeLabel{SimpleType::G, 2}, TypeLabel{SimpleType::D, 5}}) {
        RootSystem rs = RootSystem::build(lbl);
        for (std::size_t b = 0; b < rs.roots.size(); ++b) {
            if (!rs.roots[b].is_long) continue;
            auto top = kl::phi_level(rs, static_cast<int>(b), 2);
            REQUIRE(top.size() == 1);
            CHECK(rs.roots[static_cast<std::size_t>(top[0])].coeff == rs.roots[b].coeff);
            auto bottom = kl::phi_level(rs, static_cast<int>(b), -2);
            REQUIRE(bottom.size() == 1);
            CHECK(rs.roots[static_cast<std::size_t>(bottom[0])].coeff == rs.negate(rs.roots[b].coeff));
        }
    }
}

TEST_CASE("weyl orbits") {
    RootSystem g2 = RootSystem::build(SimpleType::G, 2);
    CHECK(kl::weyl_orbit_coweights(g2, g2.theta().coroot).size() == 6);  // h * r_s
    std::vector<int> zero(2, 0);
    CHECK(kl::weyl_orbit_roots(g2, zero).size() == 1);

    for (int n : {2, 3, 4}) {
        RootSystem a = RootSystem::build(SimpleType::A, n);
        CHECK(kl::weyl_orbit_roots(a, a.theta().coeff).size() == a.roots.size());
    }

    // orbits consist of the roots of one length class
    for (const auto& lbl : {TypeLabel{SimpleType::B, 3}, TypeLabel{SimpleType::F, 4}, TypeLabel{SimpleType::G, 2}}) {
        RootSystem rs = RootSystem::build(lbl);
        CHECK(static_cast<int>(kl::weyl_orbit_roots(rs, rs.theta().coeff).size()) == rs.num_long_roots());
        CHECK(static_cast<int>(kl::weyl_orbit_roots(rs, rs.gamma().coeff).size()) == rs.num_short_roots());
    }
}

TEST_CASE("parabolic orbit index") {
    CHECK(kl::parabolic_orbit_index(RootSystem::build(SimpleType::G, 2)) == 2);
    CHECK(kl::parabolic_orbit_index(RootSystem::build(SimpleType::B, 2)) == 2);
    for (const auto& lbl : {TypeLabel{SimpleType::A, 4}, TypeLabel{SimpleType::D, 5}, TypeLabel{SimpleType::E, 6}})
        CHECK(kl::parabolic_orbit_index(RootSystem::build(lbl)) == 1);
}

TEST_CASE("coxeter element orders") {
    CHECK(kl::coxeter_matrix(RootSystem::build(SimpleType::A, 1)) ==
          std::vector<std::vector<long long>>{{-1}});
    CHECK(kl::matrix_order(kl::coxeter_matrix(RootSystem::build(SimpleType::G, 2))) == 6);
    CHECK(kl::matrix_order(kl::coxeter_matrix(RootSystem::build(SimpleType::E, 8))) == 30);
}

TEST_CASE("duality") {
    RootSystem b3 = RootSystem::build(SimpleType::B, 3);
    RootSystem c3 = kl::dual(b3);
    CHECK(c3.label.str() == "C3");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(c3.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  b3.cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    CHECK(kl::dual(kl::dual(b3)).label.str() == "B3");
    CHECK(kl::dual(RootSystem::build(SimpleType::G, 2)).label.str() == "G2");
    // duality swaps short and long ranks
    for (const auto& lbl : kl::all_simple_types(8)) {
        RootSystem rs = RootSystem::build(lbl);
        RootSystem dl = kl::dual(rs);
        CHECK(rs.r_s == dl.r_l);
        CHECK(rs.r_l == dl.r_s);
        CHECK(rs.h == dl.h);
    }
}
