#include <cmath>

#include "doctest.h"
#include "kl/equidist.hpp"

using kl::Field;
using kl::KloostermanSpec;
using kl::MonodromyTarget;
using kl::RootSystem;
using kl::SimpleType;
using kl::SumTable;

TEST_CASE("monodromy target lookups") {
    CHECK(kl::monodromy_target(2, 7).label == "Sp2");
    CHECK(kl::monodromy_target(4, 3).label == "Sp4");
    CHECK(kl::monodromy_target(3, 5).label == "SL3");
    CHECK(kl::monodromy_target(7, 2).label == "G2");
    CHECK(kl::monodromy_target(5, 2).label == "SO5");
    CHECK(kl::monodromy_target(9, 2).label == "SO9");
    CHECK_THROWS_AS(kl::monodromy_target(3, 2), kl::Unlisted);
    CHECK_THROWS_AS(kl::monodromy_target(1, 5), kl::Unlisted);

    CHECK(kl::monodromy_target_dual({SimpleType::B, 3}).label == "G2");
    CHECK(kl::monodromy_target_dual({SimpleType::D, 4}).label == "G2");
    CHECK(kl::monodromy_target_dual({SimpleType::G, 2}).label == "G2");
    CHECK(kl::monodromy_target_dual({SimpleType::E, 6}).label == "F4");
    CHECK(kl::monodromy_target_dual({SimpleType::F, 4}).label == "F4");
    CHECK(kl::monodromy_target_dual({SimpleType::E, 7}).label == "E7");
    CHECK(kl::monodromy_target_dual({SimpleType::E, 8}).label == "E8");
    CHECK(kl::monodromy_target_dual({SimpleType::A, 4}).label == "SL5");
    CHECK(kl::monodromy_target_dual({SimpleType::A, 3}).label == "Sp4");
    CHECK(kl::monodromy_target_dual({SimpleType::C, 5}).label == "Sp10");
    CHECK(kl::monodromy_target_dual({SimpleType::B, 5}).label == "SO11");
    CHECK(kl::monodromy_target_dual({SimpleType::D, 6}).label == "SO11");
    CHECK_FALSE(kl::monodromy_target_dual({SimpleType::E, 7}).moments_available);
}

TEST_CASE("target label parsing") {
    CHECK(kl::parse_target("Sp4").group_type.str() == "C2");
    CHECK(kl::parse_target("Sp2").group_type.str() == "A1");
    CHECK(kl::parse_target("SL3").group_type.str() == "A2");
    CHECK_FALSE(kl::parse_target("SL3").self_dual);
    CHECK(kl::parse_target("SO7").group_type.str() == "B3");
    CHECK(kl::parse_target("G2").group_type.str() == "G2");
    CHECK_THROWS_AS(kl::parse_target("Sp3"), kl::Unlisted);
    CHECK_THROWS_AS(kl::parse_target("SO6"), kl::Unlisted);
    CHECK_THROWS_AS(kl::parse_target("U5"), kl::Unlisted);
}

TEST_CASE("targets without a moment oracle are rejected") {
    Field f = Field::make(11, 1, "");
    SumTable t = kl::table_convolution(KloostermanSpec::make(f, 2));
    CHECK_THROWS_AS(kl::compare(t, kl::monodromy_target_dual({SimpleType::E, 7}), 4), kl::Unlisted);
}

TEST_CASE("empirical moments basics") {
    Field f101 = Field::make(101, 1, "");
    SumTable t = kl::table_convolution(KloostermanSpec::make(f101, 2)).normalized_copy();
    auto m = kl::empirical_moments(t, 4);
    CHECK(m[0] == std::complex<double>(1.0, 0.0));  // m_0 exactly 1
    // self-dual data: imaginary parts vanish
    for (auto v : m) CHECK(std::abs(v.imag()) <= 1e-9);
    // mixed with b = 0 equals plain
    auto mm = kl::empirical_mixed_moments(t, 4);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(mm[static_cast<std::size_t>(k)][0] - m[static_cast<std::size_t>(k)]) < 1e-12);
}

TEST_CASE("Kl_2 moments match the SU(2) oracle at modest q") {
    Field f = Field::make(101, 1, "");
    SumTable t = kl::table_convolution(KloostermanSpec::make(f, 2));
    auto reports = kl::compare(t, kl::monodromy_target(2, 101), 6);
    std::vector<long long> want = {1, 0, 1, 0, 2, 0, 5};
    REQUIRE(reports.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(reports[i].theoretical == want[i]);
        CHECK(reports[i].pass);
    }
}

TEST_CASE("moment error shrinks with q") {
    // |m_2 - 1| at q and at >= 100 q
    auto err = [](long p) {
        Field f = Field::make(p, 1, "");
        SumTable t = kl::table_convolution(KloostermanSpec::make(f, 2)).normalized_copy();
        auto m = kl::empirical_moments(t, 2);
        return std::abs(m[2] - std::complex<double>(1.0, 0.0));
    };
    CHECK(err(10103) <= err(101));
}

TEST_CASE("angle statistics") {
    // exact quantile grid: KS <= 1/N
    int n = 4000;
    std::vector<double> grid;
    for (int i = 0; i < n; ++i) {
        double target = (static_cast<double>(i) + 0.5) / n;
        double lo = 0.0, hi = std::numbers::pi;
        for (int it = 0; it < 60; ++it) {
            double mid = (lo + hi) / 2;
            (kl::sato_tate_cdf(mid) < target ? lo : hi) = mid;
        }
        grid.push_back(lo);
    }
    auto good = kl::angle_statistics_from_values(grid, 3.0);
    CHECK(good.ks <= 1.0 / n);

    // uniform-on-[0,pi] synthetic data: wrong law, large KS
    std::vector<double> uniform;
    for (int i = 0; i < n; ++i) uniform.push_back(std::numbers::pi * (i + 0.5) / n);
    auto bad = kl::angle_statistics_from_values(uniform, 3.0);
    CHECK_FALSE(bad.pass);
    CHECK(bad.ks > 0.1);

    // real Kloosterman angles at a modest prime
    Field f = Field::make(1009, 1, "");
    SumTable t = kl::table_convolution(KloostermanSpec::make(f, 2));
    auto st = kl::angle_statistics(t);
    CHECK(st.histogram.size() == 40);
    long total = 0;
    for (long c : st.histogram) total += c;
    CHECK(total == 1008);
    CHECK(st.pass);
}

TEST_CASE("SU(3) mixed moment comparison at q = 5^4") {
    Field f = Field::make(5, 4, "");
    SumTable t = kl::table_convolution(KloostermanSpec::make(f, 3));
    auto reports = kl::compare(t, kl::monodromy_target(3, 5), 3);
    for (const auto& r : reports) {
        CAPTURE(r.k);
        CAPTURE(r.b);
        CHECK(r.pass);
        if (r.k == 1 && r.b == 1) CHECK(r.theoretical == 1);
        if (r.k == 3 && r.b == 0) CHECK(r.theoretical == 1);
        if (r.k == 2 && r.b == 1) CHECK(r.theoretical == 0);
    }
}
