#include "griess/eisenstein.hpp"

#include <ostream>
#include <stdexcept>

namespace griess {

Eisenstein Eisenstein::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(z3)");
    Rational n = norm();
    Eisenstein c = conj();
    return Eisenstein(c.re_ / n, c.zc_ / n);
}

Eisenstein& Eisenstein::operator+=(const Eisenstein& o) {
    re_ += o.re_;
    zc_ += o.zc_;
    return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& o) {
    re_ -= o.re_;
    zc_ -= o.zc_;
    return *this;
}

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
    // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2 with z^2 = -1 - z.
    Rational a = re_, b = zc_;
    Rational bd = b * o.zc_;
    re_ = a * o.re_ - bd;
    zc_ = a * o.zc_ + b * o.re_ - bd;
    return *this;
}

Eisenstein& Eisenstein::operator/=(const Eisenstein& o) {
    return *this *= o.inverse();
}

std::string Eisenstein::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out = re_.str();
    if (!zc_.is_zero()) {
        std::string coeff = zc_.str();
        if (!out.empty() && zc_.sign() > 0) out += "+";
        if (coeff == "1")
            out += "z3";
        else if (coeff == "-1")
            out += "-z3";
        else
            out += coeff + "*z3";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& z) {
    return os << z.str();
}

}  // namespace griess
