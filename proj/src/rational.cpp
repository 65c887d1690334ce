#include "griess/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace griess {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    std::string num, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = std::string(s.substr(0, slash));
        den = std::string(s.substr(slash + 1));
    } else {
        num = std::string(s);
    }
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    // mpz_class rejects the leading '+' that is_int allows.
    if (num.front() == '+') num.erase(0, 1);
    if (den.front() == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rational r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("rational division by zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace griess
