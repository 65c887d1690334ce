#pragma once

#include "griess/algebra.hpp"
#include "griess/rational.hpp"
#include "griess/report.hpp"

#include <optional>

namespace griess {

/// The admissible parameter whose built algebra matches `a` exactly
/// (same basis names, structure constants and form), if there is one.
std::optional<Rational> recognized_lambda(const GriessAlgebra& a);

/// The printed-constant audit rendered as report entries: pass where the
/// published value agrees with the derivation, flagged where it does not.
/// Entry context carries the table group the constant belongs to.
Report audit_as_report();

/// Full certification of a loaded algebra: axioms, frame recognition and
/// parameter reconstruction, eigenvalue grading, conformal generators and
/// their charges, the symmetry action, and the invariant-vector identity
/// suite of the matching dimension.  When `include_audit` is set and the
/// algebra is recognized as a built instance, the printed-constant audit is
/// appended (its discrepancies appear as flags, not failures).  Every
/// section failure is an entry; nothing throws.
Report build_verify_report(const GriessAlgebra& a, bool include_audit = true);

}  // namespace griess
