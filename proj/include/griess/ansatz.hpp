#pragma once

#include "griess/algebra.hpp"
#include "griess/poly.hpp"
#include "griess/report.hpp"

#include <array>
#include <set>

namespace griess {

/**
 * The two-generator ansatz.  A central-charge-1/2 conformal vector e and a
 * second one f = λe + a + b + c are written over the frame (e, a, b, c),
 * where a, b, c are the projections of f onto the 0-, 1/2- and
 * 1/16-eigenspaces of ad(e) and λ = 4<e,f> is the free parameter.  Every
 * product and inner product of frame vectors is then a rational function of
 * λ; this module derives those functions, classifies the admissible λ, and
 * instantiates the resulting algebras.
 */

/// Coefficient 4-tuple over the frame (e, a, b, c).
using FrameFn = std::array<RationalFn, 4>;

/// Frame coordinate indices.
inline constexpr size_t kE = 0, kA = 1, kB = 2, kC = 3;

/// All sixteen frame products as λ-dependent coefficient tuples,
/// symmetric in the two factors.
struct ParametricTable {
    std::array<std::array<FrameFn, 4>, 4> products;
};

const ParametricTable& parametric_constants();

/// Diagonal of the invariant form on the frame; the off-diagonal entries
/// vanish because distinct ad(e)-eigenspaces are orthogonal.
const std::array<RationalFn, 4>& parametric_gram();

/// The polynomial constraint obtained by equating <a*b, b> with <a, b*b>
/// after substituting the λ-dependent norms (with <c,c> scaled to 1).
RationalFn candidate_constraint();

/// The constraint <f,f> = 1/4 as a function of λ.
RationalFn norm_constraint();

/// Rational roots of the candidate constraint: {3/16, 1/64, 13/256}.
std::set<Rational> candidate_lambdas();

/// Rational roots of the norm constraint: {1/64, 13/256, 1}.
std::set<Rational> norm_constraint_roots();

/// Candidates that also satisfy the norm constraint: {1/64, 13/256}.
std::set<Rational> admissible_lambdas();

/// Does <f,f> evaluate to exactly 1/4 at this λ?  Throws std::domain_error
/// at the pole of <b,b>.
bool verify_f_norm(const Rational& lambda);

/// Instantiate the algebra at an admissible λ.  The frame vector b is
/// dropped when its norm vanishes (λ = 1/64), giving a 3-dimensional
/// algebra on (e, a, c); otherwise the result is 4-dimensional.  The
/// returned algebra is certified against the full axiom suite.
/// Non-admissible λ throws std::domain_error ("inconsistent structure").
GriessAlgebra build_algebra(const Rational& lambda);

/// Recover λ from a built algebra via <c,c> = (1-λ)/8.
Rational lambda_of(const GriessAlgebra& a);

/// The second generator f = λe + a + b + c (b omitted in dimension 3).
Element distinguished_f(const GriessAlgebra& a);

/// Evaluate a frame coefficient tuple at λ inside a built algebra,
/// dropping the b-coordinate when the algebra has no b.
Element instantiate_frame(const FrameFn& coeffs, const Rational& lambda,
                          const GriessAlgebra& a);

/// The conformal vector ω₁ = 16/(9-48λ) * a spanning the Virasoro
/// complement of e, and the algebra-level Virasoro element ω = e + ω₁.
Element omega1_of(const GriessAlgebra& a);
Element omega_of(const GriessAlgebra& a);

/**
 * Eigencomponents of e with respect to f, as λ-dependent coefficient
 * tuples: e = λf + g + h + i with g, h, i in the 0-, 1/2- and
 * 1/16-eigenspaces of ad(f).
 */
struct DerivedFrame {
    FrameFn g, h, i;
};

/// The closed-form tuples alone, without validation.
DerivedFrame derived_frame_formulas();

/// The closed-form tuples, validated at λ against the eigenprojections of
/// e with respect to f in the built algebra.  A mismatch throws with both
/// the formula value and the projected value in the message.
DerivedFrame derived_frame(const Rational& lambda);

/**
 * One published constant checked against its recomputed value.  `status`
 * is `flagged` when the printed value disagrees with the oracle, never
 * `fail`: a flag marks a misprint in the source tables, not a defect in
 * the reconstruction.
 */
struct AuditEntry {
    std::string constant;  ///< e.g. "b*b, coefficient of e"
    std::string group;     ///< e.g. "dim-4 structure table"
    Rational printed;
    Rational derived;
    CheckStatus status;
    std::string oracle;    ///< how the derived value is pinned down
};

struct AuditReport {
    std::vector<AuditEntry> entries;

    std::vector<const AuditEntry*> in_group(const std::string& group) const;
    std::vector<const AuditEntry*> flagged() const;
    size_t flag_count() const { return flagged().size(); }
};

/// Every printed structure constant of the two published tables, the
/// printed products of the conformal generators, and the orbit-sum
/// expansion, each recomputed from invariance identities or direct
/// products in the certified algebras.
AuditReport audit_printed_constants();

}  // namespace griess
