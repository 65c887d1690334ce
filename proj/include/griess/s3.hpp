#pragma once

#include "griess/algebra.hpp"
#include "griess/ansatz.hpp"

#include <array>
#include <vector>

namespace griess {

/**
 * Symmetry of a built algebra: the two reflections attached to the conformal
 * generators e and f, and their composite theta = tau_e * tau_f of order 3.
 * Together they generate a group isomorphic to the symmetric group on three
 * letters, acting by form-preserving automorphisms.
 */
struct S3Action {
    Involution tau_e, tau_f;
    Mat<Rational> theta;
};

/// Constructs the S3 action and certifies the presentation: both reflections
/// square to the identity and preserve product and form, theta is a nontrivial
/// cube root of the identity, the braid relation holds, and theta cycles
/// e -> f -> f^{tau_e}.  Also checks the orbit geometry (three distinct
/// conformal vectors of charge 1/2, pairwise inner product lambda/4).
/// Throws std::runtime_error on any failed certification.
S3Action build_action(const GriessAlgebra& a);

/// The theta-orbit {e, f, f^{tau_e}} of the first conformal generator.
std::array<Element, 3> conformal_orbit(const GriessAlgebra& a);

/// alpha = e + f + f^{tau_e}, the orbit sum; defined for both algebras.
Element orbit_sum(const GriessAlgebra& a);

struct AlphaBeta {
    Element alpha, beta;
};

/// The invariant vectors alpha and beta = (16/3)alpha of the 4-dimensional
/// algebra, certified against their product and form identities
/// (alpha^2 = (57/16)alpha - (315/256)omega, beta^2 = 19beta - 35omega,
/// <beta,beta> = 47/2, <beta,omega> = 4, <omega,omega> = 29/35).
/// Throws std::runtime_error listing both sides when an identity fails,
/// std::domain_error for the 3-dimensional algebra.
AlphaBeta alpha_beta(const GriessAlgebra& a);

struct ConformalSplit {
    Element omega2, omega3;
};

/// Splits omega = omega2 + omega3 with omega2 = 2(7omega - beta)/9 into an
/// orthogonal pair of conformal vectors with central charges 4/5 and 6/7
/// (4-dimensional algebra only).  Certifies conformality, orthogonality and
/// the charges; throws on failure.
ConformalSplit conformal_split(const GriessAlgebra& a);

/// gamma = e + z3 f + z3^2 f^{tau_e} in the complexified algebra.
CElement gamma_vector(const GriessAlgebra& a);

/// Certifies the eigenrelations of gamma over Q(z3): gamma is nonzero,
/// theta gamma = z3^2 gamma, alpha gamma = (33/16)gamma, beta gamma =
/// 11 gamma, omega2 gamma = (2/3)gamma, omega gamma = 2 gamma, and
/// <gamma,gamma> is a positive rational.  Returns the list of certified
/// claims; throws on the first failure, quoting both sides.
Report gamma_relations(const GriessAlgebra& a);

/// Basis of the fixed space ker(theta - id) inside the algebra.
std::vector<Element> theta_fixed_subspace(const GriessAlgebra& a);

/// Basis of ker(theta - mu id) in the complexified algebra.
std::vector<CElement> theta_eigenspace(const GriessAlgebra& a, const Eisenstein& mu);

}  // namespace griess
