#pragma once

#include "griess/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace griess {

/// Univariate polynomial over the rationals.  Coefficients are stored in
/// ascending degree order with trailing zeros stripped; the zero polynomial
/// is the empty list and has degree -1.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant);
    Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x();

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; the divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// Monic greatest common divisor (zero if both arguments are zero).
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Every rational root of a nonzero polynomial, found by the classical
/// divisor test on an integer-primitive rescaling and confirmed by exact
/// evaluation.  Throws std::domain_error on the zero polynomial.
std::set<Rational> rational_roots(const Poly& p);

/// Quotient of two polynomials, kept in canonical form: numerator and
/// denominator coprime, denominator monic.  Division by the zero function
/// and evaluation at a pole throw std::domain_error.
class RationalFn {
public:
    RationalFn() : num_(), den_(Rational(1)) {}
    RationalFn(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}
    RationalFn(long constant) : RationalFn(Rational(constant)) {}
    RationalFn(Poly num, Poly den = Poly(Rational(1)));

    static RationalFn x() { return RationalFn(Poly::x()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    Rational eval(const Rational& x) const;

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(const std::string& var = "x") const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace griess
