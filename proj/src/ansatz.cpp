#include "griess/ansatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace griess {

namespace {

RationalFn rf(long n, long d = 1) { return RationalFn(Rational(n, d)); }

const std::array<std::string, 4> kFrameNames = {"e", "a", "b", "c"};

}  // namespace

const ParametricTable& parametric_constants() {
    static const ParametricTable table = [] {
        ParametricTable t;
        RationalFn lm = RationalFn::x();
        RationalFn one = rf(1);
        auto set = [&](size_t i, size_t j, size_t k, const RationalFn& v) {
            t.products[i][j][k] = v;
            t.products[j][i][k] = v;
        };

        // Two recurring factors: 3 - 16λ and 64λ - 1.
        RationalFn p = rf(3) - rf(16) * lm;
        RationalFn q = rf(64) * lm - one;

        // e is conformal and a, b, c are its 0-, 1/2- and 1/16-eigenvectors.
        set(kE, kE, kE, rf(2));
        set(kE, kB, kB, rf(1, 2));
        set(kE, kC, kC, rf(1, 16));

        // Products inside and against the 0-eigenspace, functions of λ only.
        set(kA, kA, kA, rf(3, 8) * p);
        set(kA, kB, kB, rf(9, 32) * p);
        set(kA, kC, kC, rf(93, 256) * p);
        set(kB, kC, kC, rf(23, 256) * q);

        // b*b: the e-part is forced by <f,f> = 1/4 through the expansion of
        // f*f = 2f; the a-part comes from the 0-eigenspace projection.
        RationalFn bb_e = rf(2) * lm - rf(2) * lm * lm - (one - lm) * rf(1, 32);
        set(kB, kB, kE, bb_e);
        set(kB, kB, kA, rf(3, 32) * q);

        // c*c: every component is pinned by expanding f*f = 2f across the
        // eigenspaces of ad(e).
        set(kC, kC, kE, rf(2) * lm - rf(2) * lm * lm - bb_e);
        set(kC, kC, kA, rf(31, 32));
        set(kC, kC, kB, rf(8) * lm + rf(5, 16));
        return t;
    }();
    return table;
}

const std::array<RationalFn, 4>& parametric_gram() {
    static const std::array<RationalFn, 4> gram = [] {
        RationalFn lm = RationalFn::x();
        RationalFn one = rf(1);
        std::array<RationalFn, 4> g;
        g[kE] = rf(1, 4);
        g[kA] = rf(3, 64) * (one - lm) * (rf(3) - rf(16) * lm);
        g[kB] = rf(23, 128) * (one - lm) * (rf(64) * lm - one) / (rf(128) * lm + rf(5));
        g[kC] = (one - lm) * rf(1, 8);
        return g;
    }();
    return gram;
}

RationalFn candidate_constraint() {
    const auto& g = parametric_gram();
    RationalFn lm = RationalFn::x();
    // Norms relative to <c,c>, which is positive for λ < 1 and cancels.
    RationalFn na = g[kA] / g[kC];
    RationalFn nb = g[kB] / g[kC];
    // <a*b, b> = <a, b*b> with both sides expanded over the frame.
    RationalFn lhs = rf(9, 32) * (rf(3) - rf(16) * lm) * nb;
    RationalFn rhs = rf(3, 32) * (rf(64) * lm - rf(1)) * na;
    return lhs - rhs;
}

RationalFn norm_constraint() {
    const auto& g = parametric_gram();
    RationalFn lm = RationalFn::x();
    // <f,f> - 1/4 with f = λe + a + b + c and orthogonal frame.
    return lm * lm * rf(1, 4) + g[kA] + g[kB] + g[kC] - rf(1, 4);
}

std::set<Rational> candidate_lambdas() {
    return rational_roots(candidate_constraint().num());
}

std::set<Rational> norm_constraint_roots() {
    return rational_roots(norm_constraint().num());
}

std::set<Rational> admissible_lambdas() {
    std::set<Rational> out;
    std::set<Rational> norm_roots = norm_constraint_roots();
    for (const Rational& lm : candidate_lambdas())
        if (norm_roots.count(lm)) out.insert(lm);
    return out;
}

bool verify_f_norm(const Rational& lambda) {
    return norm_constraint().eval(lambda).is_zero();
}

GriessAlgebra build_algebra(const Rational& lambda) {
    if (!admissible_lambdas().count(lambda))
        throw std::domain_error("inconsistent structure: " + lambda.str() +
                                " is not an admissible parameter");

    const auto& table = parametric_constants();
    const auto& gram_fn = parametric_gram();

    // A frame vector of norm zero is the zero vector and drops out.
    std::vector<size_t> kept;
    for (size_t i = 0; i < 4; ++i)
        if (i == kE || !gram_fn[i].eval(lambda).is_zero()) kept.push_back(i);

    size_t n = kept.size();
    std::vector<std::string> names;
    for (size_t i : kept) names.push_back(kFrameNames[i]);

    std::vector<Rational> structure(n * n * n, Rational(0));
    std::vector<Rational> gram(n * n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        gram[i * n + i] = gram_fn[kept[i]].eval(lambda);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                structure[(i * n + j) * n + k] =
                    table.products[kept[i]][kept[j]][kept[k]].eval(lambda);
    }

    GriessAlgebra alg(std::move(names), std::move(structure), std::move(gram));
    Report axioms = verify_axioms(alg);
    if (!axioms.ok()) {
        std::string what = "instantiated algebra failed certification:";
        for (const auto& entry : axioms.entries())
            if (entry.status == CheckStatus::fail) what += " [" + entry.name + "]";
        throw std::logic_error(what);
    }
    return alg;
}

Rational lambda_of(const GriessAlgebra& a) {
    size_t c = a.index_of("c");
    return Rational(1) - Rational(8) * a.gram(c, c);
}

Element distinguished_f(const GriessAlgebra& a) {
    Rational lambda = lambda_of(a);
    std::vector<Rational> coords;
    for (const std::string& name : a.basis()) coords.push_back(name == "e" ? lambda : Rational(1));
    return a.element(std::move(coords));
}

Element instantiate_frame(const FrameFn& coeffs, const Rational& lambda,
                          const GriessAlgebra& a) {
    std::vector<Rational> out(a.dim(), Rational(0));
    for (size_t i = 0; i < 4; ++i) {
        auto it = std::find(a.basis().begin(), a.basis().end(), kFrameNames[i]);
        // A coefficient on a dropped frame vector multiplies zero.
        if (it == a.basis().end()) continue;
        out[static_cast<size_t>(it - a.basis().begin())] = coeffs[i].eval(lambda);
    }
    return a.element(std::move(out));
}

Element omega1_of(const GriessAlgebra& a) {
    Rational lambda = lambda_of(a);
    Rational mu = Rational(16) / (Rational(9) - Rational(48) * lambda);
    return a.basis_element(a.index_of("a")) * mu;
}

Element omega_of(const GriessAlgebra& a) {
    return a.basis_element(a.index_of("e")) + omega1_of(a);
}

DerivedFrame derived_frame_formulas() {
    RationalFn lm = RationalFn::x();
    RationalFn one = rf(1);
    DerivedFrame d;
    // The three ad(f)-eigencomponents of e; all coefficients are pinned by
    // the resummation e = λf + g + h + i and the eigenprojections.
    d.g = {(one - lm) * (rf(9, 16) - rf(3) * lm), rf(3) * lm + rf(7, 16),
           rf(3) * lm - rf(9, 16), rf(3) * lm - rf(9, 16)};
    d.h = {(rf(4) * lm - rf(1, 16)) * (one - lm), rf(1, 16) - rf(4) * lm,
           rf(17, 16) - rf(4) * lm, rf(1, 16) - rf(4) * lm};
    d.i = {(one - lm) * rf(1, 2), rf(-1, 2), rf(-1, 2), rf(1, 2)};
    return d;
}

DerivedFrame derived_frame(const Rational& lambda) {
    GriessAlgebra a = build_algebra(lambda);
    Element e = a.basis_element(a.index_of("e"));
    Element f = distinguished_f(a);
    EigenComponents comp = decompose_wrt(e, f);

    DerivedFrame d = derived_frame_formulas();
    auto expect = [&](const Element& projected, const Element& formula, const char* name) {
        if (!(projected == formula))
            throw std::runtime_error(std::string("derived frame mismatch for ") + name +
                                     ": formula gives " + formula.str() +
                                     ", eigenprojection gives " + projected.str());
    };
    expect(comp.two, f * lambda, "the 2-component");
    expect(comp.zero, instantiate_frame(d.g, lambda, a), "g");
    expect(comp.half, instantiate_frame(d.h, lambda, a), "h");
    expect(comp.sixteenth, instantiate_frame(d.i, lambda, a), "i");
    return d;
}

std::vector<const AuditEntry*> AuditReport::in_group(const std::string& group) const {
    std::vector<const AuditEntry*> out;
    for (const auto& e : entries)
        if (e.group == group) out.push_back(&e);
    return out;
}

std::vector<const AuditEntry*> AuditReport::flagged() const {
    std::vector<const AuditEntry*> out;
    for (const auto& e : entries)
        if (e.status == CheckStatus::flagged) out.push_back(&e);
    return out;
}

AuditReport audit_printed_constants() {
    AuditReport rep;
    auto add = [&](std::string constant, std::string group, Rational printed, Rational derived,
                   std::string oracle) {
        CheckStatus status = printed == derived ? CheckStatus::pass : CheckStatus::flagged;
        rep.entries.push_back({std::move(constant), std::move(group), std::move(printed),
                               std::move(derived), status, std::move(oracle)});
    };

    // The 4-dimensional algebra and the published table for it.
    {
        GriessAlgebra a = build_algebra(Rational(13, 256));
        size_t e = a.index_of("e"), av = a.index_of("a"), b = a.index_of("b"),
               c = a.index_of("c");
        const std::string g4 = "dim-4 structure table";

        add("a*a, coefficient of a", g4, Rational(105, 128), a.structure(av, av, av),
            "conformality of the spanning vector (256/105)a forces 2/(256/105)");
        add("a*b, coefficient of b", g4, Rational(315, 512), a.structure(av, b, b),
            "form invariance on (b, a, b) ties this to the a-part of b*b");
        add("b*b, coefficient of e", g4, Rational(19683, 32768), a.structure(b, b, e),
            "form invariance <b*b, e> = <b, b*e> forces <b,b>/(2<e,e>)");
        add("b*b, coefficient of a", g4, Rational(27, 128), a.structure(b, b, av),
            "form invariance on (b, b, a) ties this to the coefficient of a*b");
        add("a*c, coefficient of c", g4, Rational(3185, 4096), a.structure(av, c, c),
            "form invariance <a*c, c> = <a, c*c> forces (31/32)<a,a>/<c,c>");
        add("b*c, coefficient of c", g4, Rational(207, 1024), a.structure(b, c, c),
            "form invariance <b*c, c> = <b, c*c> forces (23/32)<b,b>/<c,c>");
        add("c*c, coefficient of e", g4, Rational(243, 8192), a.structure(c, c, e),
            "form invariance <c*c, e> = <c, c*e> forces <c,c>/4");
        add("c*c, coefficient of a", g4, Rational(31, 32), a.structure(c, c, av),
            "form invariance on (c, c, a) ties this to the coefficient of a*c");
        add("c*c, coefficient of b", g4, Rational(23, 32), a.structure(c, c, b),
            "form invariance on (c, c, b) ties this to the coefficient of b*c");

        // Printed products of the conformal generators e, f and f^{tau_e}.
        const std::string gp = "conformal generator products";
        Element ee = a.basis_element(e);
        Element f = distinguished_f(a);
        Element ft = tau_involution(ee)(f);
        Element ef = product(ee, f);
        Element fft = product(f, ft);
        Element fte = product(ft, ee);

        add("e*f, coefficient of e", gp, Rational(13, 128), ef.coords[e], "direct product");
        add("e*f, coefficient of b", gp, Rational(1, 2), ef.coords[b], "direct product");
        add("e*f, coefficient of c", gp, Rational(1, 16), ef.coords[c], "direct product");
        add("f*f^tau, coefficient of e", gp,
            Rational(13, 128) + Rational(13, 4096) - Rational(1, 16), fft.coords[e],
            "direct product");
        add("f*f^tau, coefficient of a", gp, Rational(1, 16), fft.coords[av], "direct product");
        add("f*f^tau, coefficient of b", gp, Rational(9, 16), fft.coords[b], "direct product");
        add("f^tau*e, coefficient of e", gp, Rational(13, 128), fte.coords[e], "direct product");
        add("f^tau*e, coefficient of b", gp, Rational(1, 2), fte.coords[b], "direct product");
        add("f^tau*e, coefficient of c", gp, Rational(-1, 16), fte.coords[c], "direct product");

        // The expansion of (e + f + f^{tau_e})^2: published cross-term sum,
        // then the final two coefficients over the span of alpha and omega.
        const std::string go = "orbit-sum expansion";
        Element cross = (ef + product(ee, ft) + fft) * Rational(2);
        add("cross-term sum, coefficient of e", go,
            Rational(39, 64) + Rational(13, 2048) - Rational(1, 8), cross.coords[e],
            "direct expansion of the three pairwise products");
        add("cross-term sum, coefficient of a", go, Rational(1, 8), cross.coords[av],
            "direct expansion of the three pairwise products");
        add("cross-term sum, coefficient of b", go, Rational(25, 16), cross.coords[b],
            "direct expansion of the three pairwise products");

        Element alpha = ee + f + ft;
        Element omega = omega_of(a);
        Element alpha_sq = product(alpha, alpha);
        auto coords = coordinates_in_span<Rational>({alpha.coords, omega.coords},
                                                    alpha_sq.coords);
        if (!coords)
            throw std::logic_error("alpha*alpha left the span of alpha and omega");
        add("alpha*alpha, coefficient of alpha", go, Rational(57, 16), (*coords)[0],
            "exact linear solve in span{alpha, omega}");
        add("alpha*alpha, coefficient of omega", go,
            Rational(9 * 13, 256) - Rational(27, 16), (*coords)[1],
            "exact linear solve in span{alpha, omega}");

        // Published spectral data for this algebra.
        const std::string gs = "spectral data";
        Element omega1 = omega1_of(a);
        add("omega1 normalization (dim 4)", gs, Rational(256, 105),
            omega1.coords[av], "the unique multiple of a that is conformal");
        add("central charge of e (dim 4)", gs, Rational(1, 2), central_charge(ee),
            "2<e,e>");
        add("central charge of omega1 (dim 4)", gs, Rational(81, 70), central_charge(omega1),
            "2<omega1,omega1>");
        add("central charge of omega (dim 4)", gs, Rational(58, 35), central_charge(omega),
            "2<omega,omega>");
    }

    // The 3-dimensional algebra and the published table for it.
    {
        GriessAlgebra a = build_algebra(Rational(1, 64));
        size_t e = a.index_of("e"), av = a.index_of("a"), c = a.index_of("c");
        const std::string g3 = "dim-3 structure table";

        add("a*a, coefficient of a", g3, Rational(33, 32), a.structure(av, av, av),
            "conformality of the spanning vector (64/33)a forces 2/(64/33)");
        add("a*c, coefficient of c", g3, Rational(1001, 1024), a.structure(av, c, c),
            "form invariance <a*c, c> = <a, c*c> forces (31/32)<a,a>/<c,c>");
        add("c*c, coefficient of e", g3, Rational(63, 2048), a.structure(c, c, e),
            "form invariance <c*c, e> = <c, c*e> forces <c,c>/4");
        add("c*c, coefficient of a", g3, Rational(31, 32), a.structure(c, c, av),
            "form invariance on (c, c, a) ties this to the coefficient of a*c");
        add("c*c, coefficient of b", g3, Rational(7, 16),
            (RationalFn(Rational(8)) * RationalFn::x() + RationalFn(Rational(5, 16)))
                .eval(Rational(1, 64)),
            "b vanishes in this algebra; compared against the parametric "
            "1/2-eigenpart coefficient 8λ + 5/16");

        const std::string gs = "spectral data";
        Element ee = a.basis_element(e);
        Element omega1 = omega1_of(a);
        Element omega = omega_of(a);
        add("omega1 normalization (dim 3)", gs, Rational(64, 33), omega1.coords[av],
            "the unique multiple of a that is conformal");
        add("central charge of e (dim 3)", gs, Rational(1, 2), central_charge(ee), "2<e,e>");
        add("central charge of omega1 (dim 3)", gs, Rational(21, 22), central_charge(omega1),
            "2<omega1,omega1>");
        add("central charge of omega (dim 3)", gs, Rational(16, 11), central_charge(omega),
            "2<omega,omega>");
    }

    return rep;
}

}  // namespace griess
