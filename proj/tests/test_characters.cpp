#include <complex>

#include "doctest.h"
#include "kl/characters.hpp"

using kl::AdditiveCharacter;
using kl::Field;
using kl::MultiplicativeCharacter;

namespace {

std::vector<std::pair<long, int>> prime_powers_up_to_c(long long bound) {
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

}  // namespace

TEST_CASE("additive character basics") {
    Field f2 = Field::make(2, 1, "");
    AdditiveCharacter psi2(f2);
    CHECK(psi2(f2.zero()) == std::complex<double>(1.0, 0.0));
    CHECK(psi2(f2.one()).real() == doctest::Approx(-1.0));

    Field f4 = Field::make(2, 2, "");
    AdditiveCharacter psi4(f4);
    CHECK(psi4(f4.gen()).real() == doctest::Approx(-1.0));  // trace(omega) = 1
    CHECK(std::abs(psi4(f4.gen()).imag()) < 1e-12);
}

TEST_CASE("multiplicative character basics") {
    Field f7 = Field::make(7, 1, "");
    MultiplicativeCharacter trivial(f7, 0);
    MultiplicativeCharacter quadratic(f7, 3);  // order 2 since (q-1)/gcd = 2
    for (long long i = 1; i < 7; ++i) {
        CHECK(std::abs(trivial(f7.from_index(i)) - std::complex<double>(1, 0)) < 1e-12);
    }
    CHECK(quadratic(f7.from_index(0)) == std::complex<double>(0, 0));
    // 3 generates F_7^x, so the quadratic character is -1 there
    CHECK(quadratic(f7.from_index(3)).real() == doctest::Approx(-1.0));
}

TEST_CASE("unit modulus and multiplicativity across fields") {
    for (auto [p, k] : prime_powers_up_to_c(512)) {
        Field f = Field::make(p, k, "");
        long long q = f.q();
        std::vector<long long> exps = {0, 1, (q - 1) / 2, q - 2};
        for (long long m : exps) {
            MultiplicativeCharacter chi(f, m);
            for (long long i = 0; i < q - 1; ++i) {
                kl::FieldElement x{static_cast<std::int32_t>(i)};
                CHECK(std::abs(std::abs(chi(x)) - 1.0) < 1e-12);
                // spot-check multiplicativity on a diagonal stripe; the dense
                // double loop below covers small q exhaustively
                kl::FieldElement y{static_cast<std::int32_t>((i * 7 + 3) % (q - 1))};
                CHECK(std::abs(chi(f.mul(x, y)) - chi(x) * chi(y)) <= 1e-10);
            }
        }
        if (q <= 64) {
            MultiplicativeCharacter chi(f, 1);
            for (long long i = 0; i < q - 1; ++i)
                for (long long j = 0; j < q - 1; ++j) {
                    kl::FieldElement x{static_cast<std::int32_t>(i)}, y{static_cast<std::int32_t>(j)};
                    CHECK(std::abs(chi(f.mul(x, y)) - chi(x) * chi(y)) <= 1e-10);
                }
        }
    }
}

TEST_CASE("orthogonality sums") {
    for (auto [p, k] : prime_powers_up_to_c(128)) {
        Field f = Field::make(p, k, "");
        long long q = f.q();
        AdditiveCharacter psi(f);
        std::complex<double> s{0, 0};
        s += psi(f.zero());
        for (long long i = 0; i < q - 1; ++i) {
            kl::FieldElement x{static_cast<std::int32_t>(i)};
            CHECK(std::abs(std::abs(psi(x)) - 1.0) <= 1e-12);
            s += psi(x);
        }
        if (q > 1) CHECK(std::abs(s) <= 1e-8 * static_cast<double>(q));
        for (long long m : {1LL, (q - 1) / 2}) {
            if (q < 3 || m % (q - 1) == 0) continue;  // only nontrivial characters
            MultiplicativeCharacter chi(f, m);
            std::complex<double> t{0, 0};
            for (long long i = 0; i < q - 1; ++i) t += chi(kl::FieldElement{static_cast<std::int32_t>(i)});
            CHECK(std::abs(t) <= 1e-8 * static_cast<double>(q));
        }
    }
}
