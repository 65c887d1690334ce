#include "griess/poly.hpp"

#include <stdexcept>
#include <utility>

namespace griess {

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly Poly::x() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

Rational Poly::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    std::vector<Rational> q;
    if (a.degree() >= b.degree())
        q.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    Rational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.leading() / lb;
        q[static_cast<size_t>(shift)] = f;
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        sub.push_back(f);
        rem = rem - Poly(std::move(sub)) * b;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic form of the zero polynomial");
    return *this * leading().inverse();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational ck = coeff(k);
        if (ck.is_zero()) continue;
        std::string mag = ck.abs().str();
        if (out.empty())
            out += ck.sign() < 0 ? "-" : "";
        else
            out += ck.sign() < 0 ? " - " : " + ";
        bool unit = (mag == "1");
        if (k == 0)
            out += mag;
        else {
            if (!unit) out += mag + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (mpz_divisible_p(n.get_mpz_t(), i.get_mpz_t())) {
            divs.push_back(i);
            mpz_class j = n / i;
            if (j != i) divs.push_back(j);
        }
    }
    return divs;
}

}  // namespace

std::set<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");

    std::set<Rational> roots;
    std::vector<Rational> c = p.coeffs();

    // Factor out powers of x; each contributes the root 0.
    size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() <= 1) return roots;

    // Rescale to a primitive integer polynomial with the same roots.
    mpz_class den_lcm = 1;
    for (const auto& v : c) den_lcm = lcm(den_lcm, v.den());
    std::vector<mpz_class> ic;
    ic.reserve(c.size());
    mpz_class content = 0;
    for (const auto& v : c) {
        mpz_class t = v.num() * (den_lcm / v.den());
        content = gcd(content, t);
        ic.push_back(std::move(t));
    }
    for (auto& t : ic) t /= content;

    for (const mpz_class& num : positive_divisors(ic.front())) {
        for (const mpz_class& den : positive_divisors(ic.back())) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                if (p.eval(cand).is_zero()) roots.insert(cand);
            }
        }
    }
    return roots;
}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Rational scale = den_.leading().inverse();
    num_ = num_ * scale;
    den_ = den_ * scale;
}

Rational RationalFn::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return a + (-b);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFn::str(const std::string& var) const {
    if (den_ == Poly(Rational(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace griess
