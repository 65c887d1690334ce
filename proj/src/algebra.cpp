#include "griess/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace griess {

GriessAlgebra::GriessAlgebra(std::vector<std::string> basis, std::vector<Rational> structure,
                             std::vector<Rational> gram)
    : basis_(std::move(basis)), structure_(std::move(structure)), gram_(std::move(gram)) {
    size_t n = basis_.size();
    if (n == 0) throw std::invalid_argument("algebra needs a nonempty basis");
    for (const auto& name : basis_) {
        if (name.empty()) throw std::invalid_argument("empty basis name");
        if (std::count(basis_.begin(), basis_.end(), name) != 1)
            throw std::invalid_argument("duplicate basis name '" + name + "'");
    }
    if (structure_.size() != n * n * n)
        throw std::invalid_argument("structure tensor has wrong shape");
    if (gram_.size() != n * n) throw std::invalid_argument("gram matrix has wrong shape");
}

size_t GriessAlgebra::index_of(const std::string& name) const {
    auto it = std::find(basis_.begin(), basis_.end(), name);
    if (it == basis_.end()) throw std::out_of_range("no basis vector named '" + name + "'");
    return static_cast<size_t>(it - basis_.begin());
}

Mat<Rational> GriessAlgebra::gram_matrix() const {
    Mat<Rational> g(dim(), dim());
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j) g(i, j) = gram(i, j);
    return g;
}

Element GriessAlgebra::element(std::vector<Rational> coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
    return {this, std::move(coords)};
}

Element GriessAlgebra::basis_element(size_t i) const {
    if (i >= dim()) throw std::out_of_range("basis index out of range");
    std::vector<Rational> c(dim(), Rational(0));
    c[i] = Rational(1);
    return {this, std::move(c)};
}

Element GriessAlgebra::zero() const {
    return {this, std::vector<Rational>(dim(), Rational(0))};
}

CElement GriessAlgebra::celement(std::vector<Eisenstein> coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
    return {this, std::move(coords)};
}

CElement complexify(const Element& x) {
    std::vector<Eisenstein> c(x.coords.begin(), x.coords.end());
    return {x.alg, std::move(c)};
}

Mat<Eisenstein> complexify(const Mat<Rational>& m) {
    Mat<Eisenstein> out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = Eisenstein(m(i, j));
    return out;
}

Element apply(const Mat<Rational>& m, const Element& x) {
    return {x.alg, m.apply(x.coords)};
}

CElement apply(const Mat<Rational>& m, const CElement& x) {
    return {x.alg, complexify(m).apply(x.coords)};
}

Mat<Rational> adjoint_matrix(const Element& x) {
    const GriessAlgebra& a = *x.alg;
    size_t n = a.dim();
    Mat<Rational> ad(n, n);
    for (size_t j = 0; j < n; ++j) {
        Element col = product(x, a.basis_element(j));
        for (size_t k = 0; k < n; ++k) ad(k, j) = col.coords[k];
    }
    return ad;
}

const std::vector<Rational>& conformal_spectrum() {
    static const std::vector<Rational> spectrum = {Rational(2), Rational(0), Rational(1, 2),
                                                   Rational(1, 16)};
    return spectrum;
}

namespace {

/// Lagrange projector onto the mu-eigenspace, exact because the adjoint is
/// diagonalizable over the full spectrum list.
Mat<Rational> eigen_projector(const Mat<Rational>& ad, const Rational& mu) {
    Mat<Rational> p = Mat<Rational>::identity(ad.rows());
    for (const Rational& nu : conformal_spectrum()) {
        if (nu == mu) continue;
        Mat<Rational> shifted = ad - Mat<Rational>::identity(ad.rows()) * nu;
        p = p * shifted * (mu - nu).inverse();
    }
    return p;
}

}  // namespace

EigenComponents decompose_wrt(const Element& v, const Element& x) {
    v.require_same(x);
    Mat<Rational> ad = adjoint_matrix(x);
    split_eigenspaces(ad, conformal_spectrum());
    auto part = [&](const Rational& mu) { return apply(eigen_projector(ad, mu), v); };
    return {part(Rational(2)), part(Rational(0)), part(Rational(1, 2)), part(Rational(1, 16))};
}

bool is_conformal(const Element& v) {
    return !v.is_zero() && product(v, v) == v * Rational(2);
}

Rational central_charge(const Element& v) {
    if (!is_conformal(v)) throw std::domain_error("central charge of a non-conformal vector");
    return Rational(2) * inner(v, v);
}

bool is_virasoro(const Element& w) {
    const GriessAlgebra& a = *w.alg;
    for (size_t i = 0; i < a.dim(); ++i) {
        Element b = a.basis_element(i);
        if (!(product(w, b) == b * Rational(2))) return false;
    }
    return true;
}

Involution::Involution(Mat<Rational> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !(m_ * m_ == Mat<Rational>::identity(m_.rows())))
        throw std::invalid_argument("matrix does not square to the identity");
}

Involution tau_involution(const Element& x) {
    Mat<Rational> ad = adjoint_matrix(x);
    split_eigenspaces(ad, conformal_spectrum());
    Mat<Rational> p16 = eigen_projector(ad, Rational(1, 16));
    return Involution(Mat<Rational>::identity(ad.rows()) - p16 * Rational(2));
}

Report verify_axioms(const GriessAlgebra& a) {
    Report rep;
    size_t n = a.dim();

    bool commutative = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Element xy = product(a.basis_element(i), a.basis_element(j));
            Element yx = product(a.basis_element(j), a.basis_element(i));
            if (!(xy == yx)) {
                commutative = false;
                rep.fail("product commutativity at (" + a.basis()[i] + ", " + a.basis()[j] + ")",
                         xy.str(), yx.str(), "algebra axioms");
            }
        }
    if (commutative) rep.pass("product commutativity", "", "", "all basis pairs");

    bool symmetric = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!(a.gram(i, j) == a.gram(j, i))) {
                symmetric = false;
                rep.fail("bilinear form symmetry at (" + a.basis()[i] + ", " + a.basis()[j] + ")",
                         a.gram(i, j).str(), a.gram(j, i).str(), "algebra axioms");
            }
    if (symmetric) rep.pass("bilinear form symmetry", "", "", "all basis pairs");

    bool invariant = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Rational lhs = inner(product(a.basis_element(i), a.basis_element(j)),
                                     a.basis_element(k));
                Rational rhs = inner(a.basis_element(j),
                                     product(a.basis_element(i), a.basis_element(k)));
                if (!(lhs == rhs)) {
                    invariant = false;
                    rep.fail("form invariance at (" + a.basis()[i] + ", " + a.basis()[j] + ", " +
                                 a.basis()[k] + ")",
                             lhs.str(), rhs.str(), "algebra axioms");
                }
            }
    if (invariant) rep.pass("form invariance", "", "", "all basis triples");

    if (symmetric) {
        if (is_positive_definite(a.gram_matrix()))
            rep.pass("form positive definite", "", "", "leading principal minors");
        else
            rep.fail("form positive definite", "some leading principal minor <= 0", "> 0",
                     "leading principal minors");
    } else {
        rep.fail("form positive definite", "skipped", "form not symmetric", "algebra axioms");
    }

    return rep;
}

Report verify_fusion_grading(const GriessAlgebra& a, const Element& x) {
    Report rep;
    Mat<Rational> ad = adjoint_matrix(x);
    const std::vector<Rational>& spectrum = conformal_spectrum();
    auto spaces = split_eigenspaces(ad, spectrum);

    std::vector<Mat<Rational>> proj;
    for (const Rational& mu : spectrum) proj.push_back(eigen_projector(ad, mu));

    auto elements_of = [&](size_t s) {
        std::vector<Element> out;
        for (const auto& v : spaces[s]) out.push_back({&a, v});
        return out;
    };
    // Indices into the spectrum: 0 -> eigenvalue 2, 1 -> 0, 2 -> 1/2, 3 -> 1/16.
    std::vector<std::vector<Element>> eig = {elements_of(0), elements_of(1), elements_of(2),
                                             elements_of(3)};

    auto check_rule = [&](const std::string& rule, const std::vector<size_t>& left,
                          const std::vector<size_t>& right, const std::vector<size_t>& allowed) {
        bool ok = true;
        for (size_t ls : left)
            for (const Element& u : eig[ls])
                for (size_t rs : right)
                    for (const Element& v : eig[rs]) {
                        Element w = product(u, v);
                        for (size_t s = 0; s < spectrum.size(); ++s) {
                            if (std::find(allowed.begin(), allowed.end(), s) != allowed.end())
                                continue;
                            Element leak = apply(proj[s], w);
                            if (!leak.is_zero()) {
                                ok = false;
                                rep.fail(rule + ": leak into eigenvalue " + spectrum[s].str(),
                                         "(" + u.str() + ") * (" + v.str() + ")", leak.str(),
                                         "grading");
                            }
                        }
                    }
        if (ok) rep.pass(rule, "", "", "grading");
    };

    for (size_t t = 0; t < 4; ++t)
        check_rule("products by the 2- and 0-eigenspaces preserve the eigenvalue-" +
                       spectrum[t].str() + " space",
                   {0, 1}, {t}, {t});
    check_rule("products of two 1/2-eigenvectors land in the 2- and 0-eigenspaces", {2}, {2},
               {0, 1});
    check_rule("products of 2-, 0- and 1/2-eigenvectors with a 1/16-eigenvector stay in the "
               "1/16-eigenspace",
               {0, 1, 2}, {3}, {3});
    check_rule("products of two 1/16-eigenvectors avoid the 1/16-eigenspace", {3}, {3}, {0, 1, 2});

    return rep;
}

bool automorphism_check(const GriessAlgebra& a, const Mat<Rational>& m) {
    size_t n = a.dim();
    if (m.rows() != n || m.cols() != n) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Element lhs = apply(m, product(a.basis_element(i), a.basis_element(j)));
            Element rhs = product(apply(m, a.basis_element(i)), apply(m, a.basis_element(j)));
            if (!(lhs == rhs)) return false;
        }
    return m.transpose() * a.gram_matrix() * m == a.gram_matrix();
}

}  // namespace griess
