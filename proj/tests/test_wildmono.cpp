#include <set>

#include "doctest.h"
#include "kl/wildmono.hpp"

using kl::FpPoly;
using kl::RootSystem;
using kl::SimpleType;
using kl::WildParameter;

namespace {

std::vector<long> three_smallest_good_primes(const RootSystem& rs) {
    std::vector<long> out;
    long long w = rs.weyl_order();
    for (long p = 2; static_cast<int>(out.size()) < 3; ++p) {
        if (!kl::detail::is_prime(p)) continue;
        if (w % p == 0) continue;
        out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("polynomial factorization over F_p") {
    // x^2 + 1 mod 5 = (x+2)(x+3)
    FpPoly f{5, {1, 0, 1}};
    auto fac = kl::fppoly::factor(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == FpPoly{5, {2, 1}});
    CHECK(fac[1].first == FpPoly{5, {3, 1}});

    // (x+1)^2 (x^2+x+1) mod 5: multiplicities recovered
    FpPoly sq = kl::fppoly::mul(kl::fppoly::mul(FpPoly{5, {1, 1}}, FpPoly{5, {1, 1}}), FpPoly{5, {1, 1, 1}});
    auto fac2 = kl::fppoly::factor(sq);
    REQUIRE(fac2.size() == 2);
    CHECK(fac2[0].first == FpPoly{5, {1, 1}});
    CHECK(fac2[0].second == 2);
    CHECK(fac2[1].first == FpPoly{5, {1, 1, 1}});
    CHECK(fac2[1].second == 1);

    // x^6 - 1 mod 7 splits into six linear factors
    FpPoly c{7, {6, 0, 0, 0, 0, 0, 1}};
    auto fac3 = kl::fppoly::factor(c);
    CHECK(fac3.size() == 6);
    // factorization reproduces the input
    FpPoly prod = FpPoly::one(7);
    for (auto& [g, m] : fac3)
        for (int i = 0; i < m; ++i) prod = kl::fppoly::mul(prod, g);
    CHECK(prod == kl::fppoly::make_monic(c));
}

TEST_CASE("characteristic polynomials: integer vs mod-p") {
    for (const auto& lbl : kl::all_simple_types(8)) {
        RootSystem rs = RootSystem::build(lbl);
        auto cox = kl::coxeter_matrix(rs);
        auto cp = kl::charpoly_int(cox);
        REQUIRE(static_cast<int>(cp.size()) == rs.rank + 1);
        CHECK(cp.back() == 1);
        // a Coxeter element has determinant +-1
        CHECK((cp.front() == 1 || cp.front() == -1));
        for (long p : {5L, 7L, 11L}) {
            auto direct = kl::charpoly_mod_p(cox, p);
            REQUIRE(direct.size() == cp.size());
            for (std::size_t i = 0; i < cp.size(); ++i) CHECK(direct[i] == ((cp[i] % p) + p) % p);
        }
    }
    // A1: charpoly of (-1) is x + 1
    CHECK(kl::charpoly_int({{-1}}) == std::vector<long long>{1, 1});
}

TEST_CASE("hand-checked wild parameters") {
    // (A1, p=5): h = 2, d = 1, T(zeta) is the whole line
    WildParameter a1 = kl::wild_construct(RootSystem::build(SimpleType::A, 1), 5);
    CHECK(a1.d == 1);
    CHECK(a1.t_zeta_basis.size() == 1);
    CHECK(kl::roots_nontrivial_on_tzeta(a1));
    CHECK(kl::swan_from_breaks(a1).swan == 1);

    // (G2, p=5): h = 6, ord_5(6) = 2, charpoly = x^2 - x + 1 irreducible mod 5
    WildParameter g2 = kl::wild_construct(RootSystem::build(SimpleType::G, 2), 5);
    CHECK(g2.d == 2);
    CHECK(g2.charpoly == std::vector<long long>{1, -1, 1});
    CHECK(g2.t_zeta_basis.size() == 2);  // full 2-dimensional lattice mod 5
    CHECK(kl::swan_from_breaks(g2).swan == 2);

    // (A2, p=2): 2 divides #W = 6
    CHECK_THROWS_AS(kl::wild_construct(RootSystem::build(SimpleType::A, 2), 2), kl::BadPrime);

    // E8 at p = 11 (7 divides the E8 Weyl order, so the smallest good primes
    // are 11, 13, 17): Swan equals the rank
    WildParameter e8 = kl::wild_construct(RootSystem::build(SimpleType::E, 8), 11);
    CHECK(e8.d == 2);  // 11^2 = 121 = 1 mod 30
    CHECK(kl::roots_nontrivial_on_tzeta(e8));
    CHECK(kl::swan_from_breaks(e8).swan == 8);
    CHECK(kl::swan_from_breaks(e8).dim_wild_invariants == 8);
}

TEST_CASE("full sweep: all types, three smallest good primes") {
    for (const auto& lbl : kl::all_simple_types(8)) {
        RootSystem rs = RootSystem::build(lbl);
        CAPTURE(lbl.str());
        for (long p : three_smallest_good_primes(rs)) {
            CAPTURE(p);
            WildParameter wp = kl::wild_construct(rs, p);
            CHECK(wp.d == static_cast<int>(kl::detail_wild::mod_order(p, rs.h)));
            CHECK(static_cast<int>(wp.t_zeta_basis.size()) == wp.d);
            CHECK(wp.factors[static_cast<std::size_t>(wp.chosen)].second == 1);
            CHECK(kl::roots_nontrivial_on_tzeta(wp));
            auto s = kl::swan_from_breaks(wp);
            CHECK(s.swan == rs.rank);
            CHECK(s.dim_wild_invariants == rs.rank);
            CHECK(kl::cox_tame_no_invariants(rs));
            // every qualifying Galois-orbit factor yields the same Swan
            for (std::size_t qi = 0; qi < wp.qualifying.size(); ++qi)
                CHECK(kl::swan_for_factor(wp, static_cast<int>(qi)).swan == rs.rank);
        }
    }
}

TEST_CASE("principal PGL2 exclusion bounds") {
    // A2 at p = 3: strings {2,1}, bound 3 > r_s = 2
    auto a2 = kl::pgl2_swan_bound(RootSystem::build(SimpleType::A, 2), 3);
    CHECK(a2.strings == std::vector<long>{2, 1});
    CHECK(a2.bound == 3);
    CHECK(a2.r_s == 2);
    CHECK(a2.excluded);

    // rank 1: not applicable
    auto a1 = kl::pgl2_swan_bound(RootSystem::build(SimpleType::A, 1), 5);
    CHECK_FALSE(a1.excluded);

    // G2 at p = 5: single string {3}, bound 3 > 1
    auto g2 = kl::pgl2_swan_bound(RootSystem::build(SimpleType::G, 2), 5);
    CHECK(g2.strings == std::vector<long>{3});
    CHECK(g2.bound == 3);
    CHECK(g2.excluded);

    for (const auto& lbl : kl::all_simple_types(8)) {
        if (lbl.rank < 2) continue;
        for (long p : {5L, 7L}) CHECK(kl::pgl2_swan_bound(RootSystem::build(lbl), p).excluded);
    }
}
