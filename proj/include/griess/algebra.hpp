#pragma once

#include "griess/eisenstein.hpp"
#include "griess/matrix.hpp"
#include "griess/rational.hpp"
#include "griess/report.hpp"

#include <string>
#include <vector>

namespace griess {

class GriessAlgebra;

/**
 * Element of a Griess algebra, held as coordinates over the algebra's basis.
 * The scalar field K is Rational or Eisenstein; rational elements embed into
 * the complexified algebra via `complexify`.  Elements remember their home
 * algebra, and binary operations reject elements of different algebras.
 */
template <class K>
struct ElementT {
    const GriessAlgebra* alg = nullptr;
    std::vector<K> coords;

    bool is_zero() const {
        for (const K& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    ElementT operator-() const {
        ElementT r = *this;
        for (K& c : r.coords) c = -c;
        return r;
    }

    ElementT& operator+=(const ElementT& o) {
        require_same(o);
        for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }

    ElementT& operator-=(const ElementT& o) {
        require_same(o);
        for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }

    ElementT& operator*=(const K& s) {
        for (K& c : coords) c *= s;
        return *this;
    }

    friend ElementT operator+(ElementT a, const ElementT& b) { return a += b; }
    friend ElementT operator-(ElementT a, const ElementT& b) { return a -= b; }
    friend ElementT operator*(ElementT a, const K& s) { return a *= s; }
    friend ElementT operator*(const K& s, ElementT a) { return a *= s; }

    friend bool operator==(const ElementT& a, const ElementT& b) {
        return a.alg == b.alg && a.coords == b.coords;
    }

    /// Linear-combination rendering over the basis names, e.g. "2*e + 1/2*b".
    std::string str() const;

    void require_same(const ElementT& o) const {
        if (alg != o.alg) throw std::invalid_argument("elements from different algebras");
    }
};

using Element = ElementT<Rational>;
using CElement = ElementT<Eisenstein>;

/**
 * Commutative algebra on an explicit basis with structure constants
 * S[i][j][k] (so (x*y)_k = sum S[i][j][k] x_i y_j) and a bilinear form given
 * by its Gram matrix.  Construction validates shapes only; the algebraic
 * axioms (commutativity, symmetry and invariance of the form, positive
 * definiteness) are checked by verify_axioms so that defective tables can be
 * represented and diagnosed.
 */
class GriessAlgebra {
public:
    GriessAlgebra(std::vector<std::string> basis, std::vector<Rational> structure,
                  std::vector<Rational> gram);

    size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis() const noexcept { return basis_; }
    size_t index_of(const std::string& name) const;

    const Rational& structure(size_t i, size_t j, size_t k) const {
        return structure_[(i * dim() + j) * dim() + k];
    }
    const Rational& gram(size_t i, size_t j) const { return gram_[i * dim() + j]; }
    Mat<Rational> gram_matrix() const;

    Element element(std::vector<Rational> coords) const;
    Element basis_element(size_t i) const;
    Element zero() const;
    CElement celement(std::vector<Eisenstein> coords) const;

private:
    std::vector<std::string> basis_;
    std::vector<Rational> structure_;
    std::vector<Rational> gram_;
};

CElement complexify(const Element& x);
Mat<Eisenstein> complexify(const Mat<Rational>& m);
CElement apply(const Mat<Rational>& m, const CElement& x);
Element apply(const Mat<Rational>& m, const Element& x);

template <class K>
ElementT<K> product(const ElementT<K>& x, const ElementT<K>& y);

/// Bilinear over the rationals; over Q(z3) the form is conjugate-linear in
/// the second slot, so inner(x, x) is the real norm-like value.
template <class K>
K inner(const ElementT<K>& x, const ElementT<K>& y);

/// Matrix of left multiplication by x on the algebra's basis.
Mat<Rational> adjoint_matrix(const Element& x);

/// The admissible adjoint spectrum of a conformal vector: 2, 0, 1/2, 1/16.
const std::vector<Rational>& conformal_spectrum();

/// Eigencomponents of v under left multiplication by a conformal vector,
/// keyed by the fixed spectrum.  The components re-sum to v exactly.
struct EigenComponents {
    Element two, zero, half, sixteenth;
    Element sum() const { return two + zero + half + sixteenth; }
};

EigenComponents decompose_wrt(const Element& v, const Element& x);

/// v is conformal when v*v = 2v and v is nonzero.
bool is_conformal(const Element& v);

/// 2 * inner(v, v); throws std::domain_error unless v is conformal.
Rational central_charge(const Element& v);

/// w acts as 2*id on the whole algebra.
bool is_virasoro(const Element& w);

/// Linear map with matrix M satisfying M^2 = id; construction enforces it.
class Involution {
public:
    explicit Involution(Mat<Rational> m);
    const Mat<Rational>& matrix() const noexcept { return m_; }
    Element operator()(const Element& x) const { return apply(m_, x); }
    CElement operator()(const CElement& x) const { return apply(m_, x); }

private:
    Mat<Rational> m_;
};

/// Involution fixing the 2-, 0- and 1/2-eigenspaces of ad(x) and negating
/// the 1/16-eigenspace.  Requires ad(x) diagonalizable over the spectrum.
Involution tau_involution(const Element& x);

/// Commutativity, form symmetry, invariance <x*y, z> = <y, x*z> on all basis
/// triples, and positive definiteness.  Each failure is its own entry.
Report verify_axioms(const GriessAlgebra& a);

/// The four containment rules for products of ad(x)-eigenvectors, checked on
/// eigenbasis vectors via exact eigenprojections.
Report verify_fusion_grading(const GriessAlgebra& a, const Element& x);

/// Does M preserve both the product and the bilinear form?
bool automorphism_check(const GriessAlgebra& a, const Mat<Rational>& m);

template <class K>
ElementT<K> product(const ElementT<K>& x, const ElementT<K>& y) {
    x.require_same(y);
    const GriessAlgebra& a = *x.alg;
    size_t n = a.dim();
    std::vector<K> out(n, K(0));
    for (size_t i = 0; i < n; ++i) {
        if (x.coords[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y.coords[j].is_zero()) continue;
            K xy = x.coords[i] * y.coords[j];
            for (size_t k = 0; k < n; ++k) {
                const Rational& s = a.structure(i, j, k);
                if (!s.is_zero()) out[k] += xy * K(s);
            }
        }
    }
    return {&a, std::move(out)};
}

namespace detail {
inline Rational conj_of(const Rational& x) { return x; }
inline Eisenstein conj_of(const Eisenstein& x) { return x.conj(); }
}  // namespace detail

template <class K>
K inner(const ElementT<K>& x, const ElementT<K>& y) {
    x.require_same(y);
    const GriessAlgebra& a = *x.alg;
    K acc(0);
    for (size_t i = 0; i < a.dim(); ++i) {
        if (x.coords[i].is_zero()) continue;
        for (size_t j = 0; j < a.dim(); ++j) {
            const Rational& g = a.gram(i, j);
            if (!g.is_zero()) acc += x.coords[i] * detail::conj_of(y.coords[j]) * K(g);
        }
    }
    return acc;
}

namespace detail {
inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const Eisenstein& c) {
    std::string s = c.str();
    bool compound = s.find_first_of("+-", 1) != std::string::npos;
    return compound ? "(" + s + ")" : s;
}
}  // namespace detail

template <class K>
std::string ElementT<K>::str() const {
    if (alg == nullptr) return "<detached>";
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        std::string c = detail::coeff_str(coords[i]);
        if (!out.empty()) {
            if (c.front() == '-') {
                out += " - ";
                c.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        if (c == "1")
            out += alg->basis()[i];
        else if (c == "-1")
            out += "-" + alg->basis()[i];
        else
            out += c + "*" + alg->basis()[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace griess
