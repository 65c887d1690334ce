#include "griess/s3.hpp"

#include <stdexcept>
#include <utility>

namespace griess {

namespace {

void require_eq(const Element& lhs, const Element& rhs, const std::string& what) {
    if (!(lhs == rhs))
        throw std::runtime_error(what + ": left side " + lhs.str() + ", right side " + rhs.str());
}

void require_eq(const Rational& lhs, const Rational& rhs, const std::string& what) {
    if (!(lhs == rhs))
        throw std::runtime_error(what + ": left side " + lhs.str() + ", right side " + rhs.str());
}

void require_dim4(const GriessAlgebra& a, const char* what) {
    if (lambda_of(a) != Rational(13, 256))
        throw std::domain_error(std::string(what) + " requires the lambda = 13/256 algebra");
}

}  // namespace

S3Action build_action(const GriessAlgebra& a) {
    Element e = a.basis_element(a.index_of("e"));
    Element f = distinguished_f(a);
    if (!is_conformal(e) || !is_conformal(f))
        throw std::runtime_error("not S3: a generator is not conformal");
    if (central_charge(e) != Rational(1, 2) || central_charge(f) != Rational(1, 2))
        throw std::runtime_error("not S3: a generator does not have charge 1/2");

    Involution te = tau_involution(e);
    Involution tf = tau_involution(f);
    if (!automorphism_check(a, te.matrix()) || !automorphism_check(a, tf.matrix()))
        throw std::runtime_error("not S3: a reflection is not an automorphism");

    Mat<Rational> theta = te.matrix() * tf.matrix();
    Mat<Rational> id = Mat<Rational>::identity(a.dim());
    if (theta == id) throw std::runtime_error("not S3: theta is the identity");
    if (!(theta * theta * theta == id))
        throw std::runtime_error("not S3: theta^3 is not the identity");
    if (!(te.matrix() * tf.matrix() * te.matrix() == tf.matrix() * te.matrix() * tf.matrix()))
        throw std::runtime_error("not S3: braid relation fails");

    Element ft = te(f);
    require_eq(apply(theta, e), f, "not S3: theta does not send e to f");
    require_eq(apply(theta, f), ft, "not S3: theta does not send f to f^{tau_e}");

    // The reflection conjugate tau_e tau_f tau_e swaps the two generators.
    Mat<Rational> swap = te.matrix() * tf.matrix() * te.matrix();
    require_eq(apply(swap, e), f, "not S3: the conjugated reflection does not move e to f");
    require_eq(apply(swap, f), e, "not S3: the conjugated reflection does not move f to e");

    if (e == f || e == ft || f == ft)
        throw std::runtime_error("not S3: the orbit of e is degenerate");
    if (!is_conformal(ft)) throw std::runtime_error("not S3: f^{tau_e} is not conformal");
    Rational expected = lambda_of(a) / Rational(4);
    require_eq(inner(e, f), expected, "orbit inner product <e,f>");
    require_eq(inner(e, ft), expected, "orbit inner product <e,f^{tau_e}>");
    require_eq(inner(f, ft), expected, "orbit inner product <f,f^{tau_e}>");

    return {std::move(te), std::move(tf), std::move(theta)};
}

std::array<Element, 3> conformal_orbit(const GriessAlgebra& a) {
    Element e = a.basis_element(a.index_of("e"));
    Element f = distinguished_f(a);
    Element ft = tau_involution(e)(f);
    return {std::move(e), std::move(f), std::move(ft)};
}

Element orbit_sum(const GriessAlgebra& a) {
    auto orbit = conformal_orbit(a);
    return orbit[0] + orbit[1] + orbit[2];
}

AlphaBeta alpha_beta(const GriessAlgebra& a) {
    require_dim4(a, "the alpha/beta identities");
    Element alpha = orbit_sum(a);
    Element beta = alpha * Rational(16, 3);
    Element omega = omega_of(a);

    require_eq(product(alpha, alpha), alpha * Rational(57, 16) - omega * Rational(315, 256),
               "alpha*alpha = (57/16)alpha - (315/256)omega");
    require_eq(product(beta, beta), beta * Rational(19) - omega * Rational(35),
               "beta*beta = 19beta - 35omega");
    require_eq(inner(beta, beta), Rational(47, 2), "<beta,beta> = 47/2");
    require_eq(inner(beta, omega), Rational(4), "<beta,omega> = 4");
    require_eq(inner(omega, omega), Rational(29, 35), "<omega,omega> = 29/35");
    return {std::move(alpha), std::move(beta)};
}

ConformalSplit conformal_split(const GriessAlgebra& a) {
    require_dim4(a, "the conformal splitting");
    AlphaBeta ab = alpha_beta(a);
    Element omega = omega_of(a);
    Element omega2 = (omega * Rational(7) - ab.beta) * Rational(2, 9);
    Element omega3 = omega - omega2;

    if (!is_conformal(omega2))
        throw std::runtime_error("omega2 is not conformal: " + omega2.str());
    if (!is_conformal(omega3))
        throw std::runtime_error("omega3 is not conformal: " + omega3.str());
    require_eq(central_charge(omega2), Rational(4, 5), "central charge of omega2");
    require_eq(central_charge(omega3), Rational(6, 7), "central charge of omega3");
    require_eq(product(omega2, omega3), a.zero(), "omega2*omega3 = 0");
    require_eq(inner(omega2, omega3), Rational(0), "<omega2,omega3> = 0");
    return {std::move(omega2), std::move(omega3)};
}

CElement gamma_vector(const GriessAlgebra& a) {
    auto orbit = conformal_orbit(a);
    return complexify(orbit[0]) + complexify(orbit[1]) * Eisenstein::zeta() +
           complexify(orbit[2]) * Eisenstein::zeta_sq();
}

Report gamma_relations(const GriessAlgebra& a) {
    require_dim4(a, "the gamma eigenrelations");
    S3Action s = build_action(a);
    AlphaBeta ab = alpha_beta(a);
    ConformalSplit split = conformal_split(a);
    CElement gamma = gamma_vector(a);

    Report rep;
    if (gamma.is_zero()) throw std::runtime_error("gamma is zero");
    rep.pass("gamma is nonzero", gamma.str());

    auto expect = [&rep](const CElement& lhs, const CElement& rhs, const std::string& what) {
        if (!(lhs == rhs))
            throw std::runtime_error(what + ": left side " + lhs.str() + ", right side " +
                                     rhs.str());
        rep.pass(what, lhs.str(), rhs.str());
    };
    expect(apply(s.theta, gamma), gamma * Eisenstein::zeta_sq(), "theta gamma = z3^2 gamma");
    expect(product(complexify(ab.alpha), gamma), gamma * Eisenstein(Rational(33, 16)),
           "alpha*gamma = (33/16)gamma");
    expect(product(complexify(ab.beta), gamma), gamma * Eisenstein(Rational(11)),
           "beta*gamma = 11gamma");
    expect(product(complexify(split.omega2), gamma), gamma * Eisenstein(Rational(2, 3)),
           "omega2*gamma = (2/3)gamma");
    expect(product(complexify(omega_of(a)), gamma), gamma * Eisenstein(Rational(2)),
           "omega*gamma = 2gamma");

    Eisenstein norm = inner(gamma, gamma);
    if (!norm.is_rational() || norm.re().sign() <= 0)
        throw std::runtime_error("<gamma,gamma> is not a positive rational: " + norm.str());
    rep.pass("<gamma,gamma> is a positive rational", norm.str());
    return rep;
}

std::vector<Element> theta_fixed_subspace(const GriessAlgebra& a) {
    S3Action s = build_action(a);
    std::vector<Element> out;
    for (auto& v : kernel(s.theta - Mat<Rational>::identity(a.dim())))
        out.push_back(a.element(std::move(v)));
    return out;
}

std::vector<CElement> theta_eigenspace(const GriessAlgebra& a, const Eisenstein& mu) {
    S3Action s = build_action(a);
    Mat<Eisenstein> shifted =
        complexify(s.theta) - Mat<Eisenstein>::identity(a.dim()) * mu;
    std::vector<CElement> out;
    for (auto& v : kernel(std::move(shifted))) out.push_back(a.celement(std::move(v)));
    return out;
}

}  // namespace griess
