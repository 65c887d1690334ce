#pragma once

#include "griess/rational.hpp"

#include <iosfwd>
#include <string>

namespace griess {

/**
 * Element of Q(z3), the field obtained by adjoining a primitive cube root
 * of unity z3 to the rationals.  Stored on the basis {1, z3}, so a value
 * is re + zc*z3 with z3^2 = -1 - z3.
 */
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(Rational re) : re_(std::move(re)) {}
    Eisenstein(long n) : re_(n) {}
    Eisenstein(Rational re, Rational zc) : re_(std::move(re)), zc_(std::move(zc)) {}

    static Eisenstein zeta() { return Eisenstein(Rational(0), Rational(1)); }
    /// z3^2 = -1 - z3, the other primitive cube root.
    static Eisenstein zeta_sq() { return Eisenstein(Rational(-1), Rational(-1)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& zc() const noexcept { return zc_; }

    bool is_zero() const noexcept { return re_.is_zero() && zc_.is_zero(); }
    bool is_rational() const noexcept { return zc_.is_zero(); }

    /// Complex conjugate: swaps z3 and z3^2.
    Eisenstein conj() const { return Eisenstein(re_ - zc_, -zc_); }

    /// Field norm z * conj(z) = re^2 - re*zc + zc^2, a non-negative rational.
    Rational norm() const { return re_ * re_ - re_ * zc_ + zc_ * zc_; }

    Eisenstein inverse() const;

    Eisenstein operator-() const { return Eisenstein(-re_, -zc_); }
    Eisenstein& operator+=(const Eisenstein& o);
    Eisenstein& operator-=(const Eisenstein& o);
    Eisenstein& operator*=(const Eisenstein& o);
    Eisenstein& operator/=(const Eisenstein& o);

    friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
    friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
    friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
    friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }

    friend bool operator==(const Eisenstein& a, const Eisenstein& b) {
        return a.re_ == b.re_ && a.zc_ == b.zc_;
    }

    /// "re", "zc*z3" or "re+zc*z3" with canonical signs, "0" for zero.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Eisenstein& z);

private:
    Rational re_, zc_;
};

}  // namespace griess
