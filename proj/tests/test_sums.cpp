#include <cmath>
#include <complex>
#include <cstring>
#include <numbers>

#include "doctest.h"
#include "kl/sums.hpp"

using kl::Field;
using kl::FieldElement;
using kl::KloostermanSpec;
using kl::SumTable;

namespace {

// direct textbook evaluation, independent of the engine's factor tables
std::complex<double> brute_kl(const Field& f, int n, FieldElement a) {
    long long q = f.q();
    std::complex<double> total{0, 0};
    double pi2p = 2.0 * std::numbers::pi / static_cast<double>(f.p());
    std::vector<long long> idx(static_cast<std::size_t>(n), 1);
    for (;;) {
        FieldElement prod = f.one();
        FieldElement sum = f.zero();
        for (int i = 0; i < n; ++i) {
            FieldElement x = f.from_index(idx[static_cast<std::size_t>(i)]);
            prod = f.mul(prod, x);
            sum = f.add(sum, x);
        }
        if (prod == a) {
            double ang = pi2p * static_cast<double>(f.trace(sum));
            total += std::complex<double>(std::cos(ang), std::sin(ang));
        }
        int t = n - 1;
        while (t >= 0 && ++idx[static_cast<std::size_t>(t)] == q) {
            idx[static_cast<std::size_t>(t)] = 1;
            --t;
        }
        if (t < 0) break;
    }
    if ((n - 1) % 2) total = -total;
    return total;
}

}  // namespace

TEST_CASE("hand-checked Kloosterman values") {
    Field f2 = Field::make(2, 1, "");
    auto s2 = KloostermanSpec::make(f2, 2);
    CHECK(std::abs(kl::kloosterman(s2, f2.one()) - std::complex<double>(-1, 0)) < 1e-12);

    Field f3 = Field::make(3, 1, "");
    auto s3 = KloostermanSpec::make(f3, 2);
    // Kl_2(1;3) = -(psi(2) + psi(1)) = 1
    CHECK(std::abs(kl::kloosterman(s3, f3.from_index(1)) - std::complex<double>(1, 0)) < 1e-12);

    // n = 1: Kl_1(a) = psi(a)
    Field f7 = Field::make(7, 1, "");
    auto s1 = KloostermanSpec::make(f7, 1);
    kl::AdditiveCharacter psi(f7);
    for (long long i = 1; i < 7; ++i) {
        FieldElement a = f7.from_index(i);
        CHECK(std::abs(kl::kloosterman(s1, a) - psi(a)) < 1e-12);
    }

    CHECK_THROWS_AS(kl::kloosterman(s3, f3.zero()), kl::ZeroArgument);
}

TEST_CASE("engine agrees with the brute-force oracle at q = 5") {
    Field f5 = Field::make(5, 1, "");
    for (int n : {1, 2, 3}) {
        auto spec = KloostermanSpec::make(f5, n);
        SumTable conv = kl::table_convolution(spec);
        SumTable naive = kl::table_naive(spec);
        for (long long j = 0; j < 4; ++j) {
            FieldElement a{static_cast<std::int32_t>(j)};
            auto want = brute_kl(f5, n, a);
            CHECK(std::abs(naive.at(a) - want) < 1e-10);
            CHECK(std::abs(conv.at(a) - want) < 1e-9);
            CHECK(std::abs(kl::kloosterman(spec, a) - want) < 1e-10);
        }
    }
    // hand-computed value: Kl_2(4;5) = -(2 + psi(1) + psi(4))
    auto spec = KloostermanSpec::make(f5, 2);
    kl::AdditiveCharacter psi(f5);
    auto want = -(2.0 + psi(f5.from_index(1)) + psi(f5.from_index(4)));
    CHECK(std::abs(kl::table_convolution(spec).at(f5.from_index(4)) - want) < 1e-9);
}

TEST_CASE("n = 1 convolution is the factor function itself") {
    Field f = Field::make(7, 1, "");
    kl::AdditiveCharacter psi(f);
    kl::MultiplicativeCharacter chi(f, 2);
    FieldElement c = f.from_index(3);
    auto spec = KloostermanSpec::make(f, 1, {c}, {2});
    SumTable t = kl::table_convolution(spec);
    for (long long j = 0; j < 6; ++j) {
        FieldElement a{static_cast<std::int32_t>(j)};
        CHECK(std::abs(t.at(a) - chi(a) * psi(f.mul(c, a))) < 1e-12);
    }
}

TEST_CASE("convolution matches naive with characters and coefficients") {
    kl::Rng rng(77);
    for (auto [p, k] : {std::pair<long, int>{7, 1}, {2, 4}, {3, 3}, {5, 2}}) {
        Field f = Field::make(p, k, "");
        long long m = f.q() - 1;
        for (int n : {2, 3}) {
            std::vector<FieldElement> coeffs;
            std::vector<long long> chi;
            for (int i = 0; i < n; ++i) {
                coeffs.push_back(FieldElement{static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(m)))});
                chi.push_back(static_cast<long long>(rng.below(static_cast<std::uint64_t>(m))));
            }
            auto spec = KloostermanSpec::make(f, n, coeffs, chi);
            SumTable a = kl::table_naive(spec);
            SumTable b = kl::table_convolution(spec);
            double tol = 1e-9 * a.weight_scale();
            for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(std::abs(a.values[i] - b.values[i]) <= tol);
        }
    }
}

TEST_CASE("single-point evaluation agrees with the tables") {
    kl::Rng rng(321);
    Field f = Field::make(3, 2, "");
    long long m = f.q() - 1;
    for (int n : {2, 3}) {
        std::vector<FieldElement> coeffs;
        std::vector<long long> chi;
        for (int i = 0; i < n; ++i) {
            coeffs.push_back(FieldElement{static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(m)))});
            chi.push_back(static_cast<long long>(rng.below(static_cast<std::uint64_t>(m))));
        }
        auto spec = KloostermanSpec::make(f, n, coeffs, chi);
        SumTable t = kl::table_naive(spec);
        for (long long j = 0; j < m; ++j) {
            FieldElement a{static_cast<std::int32_t>(j)};
            CHECK(std::abs(kl::kloosterman(spec, a) - t.at(a)) < 1e-10 * t.weight_scale());
        }
    }
}

TEST_CASE("naive tables are bit-identical across runs and thread counts") {
    Field f = Field::make(13, 1, "");
    auto spec = KloostermanSpec::make(f, 3, {}, {0, 5, 0});
    SumTable a = kl::table_naive(spec, kl::Parallel(1));
    SumTable b = kl::table_naive(spec, kl::Parallel(1));
    SumTable c = kl::table_naive(spec, kl::Parallel(4));
    REQUIRE(a.values.size() == b.values.size());
    CHECK(std::memcmp(a.values.data(), b.values.data(), a.values.size() * sizeof(a.values[0])) == 0);
    CHECK(std::memcmp(a.values.data(), c.values.data(), a.values.size() * sizeof(a.values[0])) == 0);
}

TEST_CASE("weil bound reports") {
    Field f101 = Field::make(101, 1, "");
    auto r2 = kl::weil_report(kl::table_convolution(KloostermanSpec::make(f101, 2)));
    CHECK(r2.pass);
    CHECK(r2.max_ratio <= 2.0 + 1e-6);

    Field f49 = Field::make(7, 2, "");
    auto r3 = kl::weil_report(kl::table_convolution(KloostermanSpec::make(f49, 3)));
    CHECK(r3.pass);
    CHECK(r3.max_ratio <= 3.0 + 1e-6);

    Field f7 = Field::make(7, 1, "");
    auto r1 = kl::weil_report(kl::table_convolution(KloostermanSpec::make(f7, 1)));
    CHECK(r1.max_ratio == doctest::Approx(1.0));
}

TEST_CASE("angles") {
    Field f3 = Field::make(3, 1, "");
    SumTable t = kl::table_convolution(KloostermanSpec::make(f3, 2)).normalized_copy();
    // Kl_2(1;3) = 1 -> normalized 1/sqrt(3)
    double theta = kl::angle(t, f3.from_index(1));
    CHECK(theta == doctest::Approx(std::acos(1.0 / (2.0 * std::sqrt(3.0)))));

    SumTable fake = t;
    fake.values.assign(fake.values.size(), {2.0, 0.0});
    CHECK(kl::angle(fake, f3.from_index(1)) == doctest::Approx(0.0));
    fake.values.assign(fake.values.size(), {0.0, 0.0});
    CHECK(kl::angle(fake, f3.from_index(1)) == doctest::Approx(std::numbers::pi / 2));
    fake.values.assign(fake.values.size(), {0.0, 1.0});
    CHECK_THROWS_AS(kl::angle(fake, f3.from_index(1)), kl::NotReal);
}

TEST_CASE("symmetries") {
    for (auto [p, k] : {std::pair<long, int>{11, 1}, {3, 2}}) {
        Field f = Field::make(p, k, "");
        for (int n : {2, 3}) {
            SumTable t = kl::table_convolution(KloostermanSpec::make(f, n));
            CHECK(kl::conj_symmetry_check(t));
        }
        // Kl_2 is real for trivial chi
        SumTable t2 = kl::table_convolution(KloostermanSpec::make(f, 2));
        for (auto v : t2.values) CHECK(std::abs(v.imag()) <= 1e-9 * std::sqrt(static_cast<double>(f.q())));
    }
    kl::Rng rng(5);
    Field f13 = Field::make(13, 1, "");
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<FieldElement> coeffs;
        std::vector<long long> chi;
        for (int i = 0; i < 2; ++i) {
            coeffs.push_back(FieldElement{static_cast<std::int32_t>(rng.below(12))});
            chi.push_back(static_cast<long long>(rng.below(12)));
        }
        auto spec = KloostermanSpec::make(f13, 2, coeffs, chi);
        CHECK(kl::coeff_covariance_check(spec, f13.from_index(1 + static_cast<long long>(rng.below(12)))));
    }
}

TEST_CASE("budget guard") {
    Field f = Field::make(101, 1, "");
    auto spec = KloostermanSpec::make(f, 4);
    CHECK_THROWS_AS(kl::table_naive(spec, kl::Parallel(1), 1000000), kl::BudgetExceeded);
}
