#pragma once

#include "tdmono/check_report.hpp"
#include "tdmono/strata/model.hpp"

namespace tdmono::strata {

// Structural invariants of the model plus: every incidence map a complex
// needs is supplied, P_a = P_{d-a}^T, and xi is self-adjoint for the pairing.
CheckReport validate_structure(const DegenerationModel& m);

// xi^{d_I - 2i} : CH^i -> CH^{d_I - i} has nonzero determinant for i <= d_I / 2.
CheckReport check_hard_lefschetz(const DegenerationModel& m);

// (-1)^i deg(x . xi^{d_I - 2i} y) is positive definite on the primitive
// sublattice ker(xi^{d_I - 2i + 1}) of CH^i, for i <= d_I / 2.
CheckReport check_hodge_index(const DegenerationModel& m);

// Projection formula: R^T P_J = P_I G for each restriction R : CH^a(Y_I) ->
// CH^a(Y_J) and the Gysin map G : CH^{d_J - a}(Y_J) -> CH^{d_I - a}(Y_I).
CheckReport check_adjointness(const DegenerationModel& m);

// All of the above, merged.
CheckReport validate_all(const DegenerationModel& m);

// Declared (unverifiable) conditions, echoed into reports.
std::vector<std::string> declared_conditions(const DegenerationModel& m);

} // namespace tdmono::strata
