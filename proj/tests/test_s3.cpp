#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "griess/ansatz.hpp"
#include "griess/s3.hpp"

#include <stdexcept>

using namespace griess;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("build_action certifies the symmetric-group presentation") {
    for (const Rational& lambda : admissible_lambdas()) {
        GriessAlgebra a = build_algebra(lambda);
        S3Action act = build_action(a);
        size_t n = a.dim();
        Mat<Rational> id = Mat<Rational>::identity(n);

        CHECK(act.tau_e.matrix() * act.tau_e.matrix() == id);
        CHECK(act.tau_f.matrix() * act.tau_f.matrix() == id);
        CHECK(act.theta == act.tau_e.matrix() * act.tau_f.matrix());
        CHECK_FALSE(act.theta == id);
        CHECK(act.theta * act.theta * act.theta == id);
        CHECK(automorphism_check(a, act.tau_e.matrix()));
        CHECK(automorphism_check(a, act.tau_f.matrix()));
        CHECK(automorphism_check(a, act.theta));

        // Braid relation between the two reflections.
        Mat<Rational> te = act.tau_e.matrix();
        Mat<Rational> tf = act.tau_f.matrix();
        CHECK(te * tf * te == tf * te * tf);
    }
}

TEST_CASE("the orbit consists of three charge-1/2 conformal vectors") {
    for (const Rational& lambda : admissible_lambdas()) {
        GriessAlgebra a = build_algebra(lambda);
        auto orbit = conformal_orbit(a);
        CHECK(orbit[0] == a.basis_element(0));
        CHECK(orbit[1] == distinguished_f(a));
        for (size_t i = 0; i < 3; ++i) {
            CHECK(is_conformal(orbit[i]));
            CHECK(central_charge(orbit[i]) == rat(1, 2));
            for (size_t j = i + 1; j < 3; ++j) {
                CHECK_FALSE(orbit[i] == orbit[j]);
                CHECK(inner(orbit[i], orbit[j]) == lambda / rat(4));
            }
        }

        // theta cycles the orbit.
        S3Action act = build_action(a);
        CHECK(apply(act.theta, orbit[0]) == orbit[1]);
        CHECK(apply(act.theta, orbit[1]) == orbit[2]);
        CHECK(apply(act.theta, orbit[2]) == orbit[0]);
    }
}

TEST_CASE("invariant vectors and their identities in dimension 4") {
    GriessAlgebra a = build_algebra(rat(13, 256));
    AlphaBeta ab = alpha_beta(a);
    Element w = omega_of(a);

    CHECK(ab.alpha == orbit_sum(a));
    CHECK(ab.alpha == a.element({rat(141, 128), rat(2), rat(2), rat(0)}));
    CHECK(ab.beta == ab.alpha * rat(16, 3));
    CHECK(ab.beta == a.element({rat(47, 8), rat(32, 3), rat(32, 3), rat(0)}));

    CHECK(product(ab.alpha, ab.alpha) == ab.alpha * rat(57, 16) - w * rat(315, 256));
    CHECK(product(ab.beta, ab.beta) == ab.beta * rat(19) - w * rat(35));
    CHECK(inner(ab.beta, ab.beta) == rat(47, 2));
    CHECK(inner(ab.beta, w) == rat(4));
    CHECK(inner(w, w) == rat(29, 35));
}

TEST_CASE("orbit sum in dimension 3 is a multiple of omega") {
    GriessAlgebra a = build_algebra(rat(1, 64));
    Element alpha = orbit_sum(a);
    CHECK(alpha == a.element({rat(33, 32), rat(2), rat(0)}));
    CHECK(alpha == omega_of(a) * rat(33, 32));
    CHECK_THROWS_AS(alpha_beta(a), std::domain_error);
    CHECK_THROWS_AS(conformal_split(a), std::domain_error);
}

TEST_CASE("omega splits into orthogonal conformal vectors") {
    GriessAlgebra a = build_algebra(rat(13, 256));
    ConformalSplit split = conformal_split(a);
    Element w = omega_of(a);

    CHECK(split.omega2 + split.omega3 == w);
    CHECK(split.omega2 ==
          a.element({rat(1, 4), rat(64, 45), rat(-64, 27), rat(0)}));
    CHECK(is_conformal(split.omega2));
    CHECK(is_conformal(split.omega3));
    CHECK(central_charge(split.omega2) == rat(4, 5));
    CHECK(central_charge(split.omega3) == rat(6, 7));
    CHECK(product(split.omega2, split.omega3).is_zero());
    CHECK(inner(split.omega2, split.omega3) == rat(0));

    AlphaBeta ab = alpha_beta(a);
    CHECK(split.omega2 == (w * rat(7) - ab.beta) * rat(2, 9));
}

TEST_CASE("gamma spans a one-dimensional theta-eigenspace over Q(z3)") {
    GriessAlgebra a = build_algebra(rat(13, 256));
    CElement gamma = gamma_vector(a);
    S3Action act = build_action(a);

    CHECK_FALSE(gamma.is_zero());
    CHECK(apply(act.theta, gamma) == gamma * Eisenstein::zeta_sq());

    AlphaBeta ab = alpha_beta(a);
    ConformalSplit split = conformal_split(a);
    CHECK(product(complexify(ab.alpha), gamma) == gamma * Eisenstein(rat(33, 16)));
    CHECK(product(complexify(ab.beta), gamma) == gamma * Eisenstein(rat(11)));
    CHECK(product(complexify(split.omega2), gamma) == gamma * Eisenstein(rat(2, 3)));
    CHECK(product(complexify(omega_of(a)), gamma) == gamma * Eisenstein(rat(2)));

    Eisenstein norm = inner(gamma, gamma);
    CHECK(norm.is_rational());
    CHECK(norm.re().sign() > 0);

    Report rep = gamma_relations(a);
    CHECK(rep.ok());
    CHECK(rep.entries().size() == 7);
}

TEST_CASE("theta-fixed subspace dimensions") {
    GriessAlgebra a4 = build_algebra(rat(13, 256));
    std::vector<Element> fixed4 = theta_fixed_subspace(a4);
    CHECK(fixed4.size() == 2);
    for (const Element& v : fixed4) {
        S3Action act = build_action(a4);
        CHECK(apply(act.theta, v) == v);
    }

    GriessAlgebra a3 = build_algebra(rat(1, 64));
    std::vector<Element> fixed3 = theta_fixed_subspace(a3);
    CHECK(fixed3.size() == 1);
}

TEST_CASE("theta eigenspaces over Q(z3) split the complexified algebra") {
    GriessAlgebra a = build_algebra(rat(13, 256));
    S3Action act = build_action(a);

    auto fixed = theta_eigenspace(a, Eisenstein(1));
    auto zeta_space = theta_eigenspace(a, Eisenstein::zeta());
    auto zeta_sq_space = theta_eigenspace(a, Eisenstein::zeta_sq());
    CHECK(fixed.size() == 2);
    CHECK(zeta_space.size() == 1);
    CHECK(zeta_sq_space.size() == 1);
    CHECK(fixed.size() + zeta_space.size() + zeta_sq_space.size() == a.dim());

    for (const CElement& v : zeta_space)
        CHECK(apply(act.theta, v) == v * Eisenstein::zeta());
    for (const CElement& v : zeta_sq_space)
        CHECK(apply(act.theta, v) == v * Eisenstein::zeta_sq());

    // gamma lies in the zeta^2-eigenspace.
    CElement gamma = gamma_vector(a);
    CHECK(apply(act.theta, gamma) == gamma * Eisenstein::zeta_sq());
}
