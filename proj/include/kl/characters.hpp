#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "kl/field.hpp"

namespace kl {

using cplx = std::complex<double>;

// psi(x) = exp(2*pi*i * trace(x) / p), the additive character pinned to the
// standard embedding (so computed sums are the classical complex values).
class AdditiveCharacter {
public:
    explicit AdditiveCharacter(const Field& f) : field_(f) {
        long p = f.p();
        roots_.resize(static_cast<std::size_t>(p));
        for (long j = 0; j < p; ++j) {
            double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p);
            roots_[static_cast<std::size_t>(j)] = cplx(std::cos(t), std::sin(t));
        }
    }

    const Field& field() const { return field_; }
    cplx root(long j) const { return roots_[static_cast<std::size_t>(((j % field_.p()) + field_.p()) % field_.p())]; }
    cplx operator()(FieldElement x) const { return roots_[static_cast<std::size_t>(field_.trace(x))]; }

private:
    Field field_;
    std::vector<cplx> roots_;
};

// chi_m(g^j) = exp(2*pi*i * m * j / (q-1)); chi(0) = 0; m = 0 is trivial.
class MultiplicativeCharacter {
public:
    MultiplicativeCharacter(const Field& f, long long exponent) : field_(f) {
        long long m = f.q() - 1;
        exponent_ = ((exponent % m) + m) % m;
    }

    const Field& field() const { return field_; }
    long long exponent() const { return exponent_; }
    bool is_trivial() const { return exponent_ == 0; }

    cplx operator()(FieldElement x) const {
        if (x.is_zero()) return {0.0, 0.0};
        long long m = field_.q() - 1;
        long long t = (__int128)exponent_ * x.log % m;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
        return cplx(std::cos(ang), std::sin(ang));
    }

private:
    Field field_;
    long long exponent_ = 0;
};

inline cplx eval_add(const AdditiveCharacter& psi, FieldElement x) { return psi(x); }
inline cplx eval_mul(const MultiplicativeCharacter& chi, FieldElement x) { return chi(x); }

}  // namespace kl
