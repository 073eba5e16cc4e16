#pragma once

// Evaluation of parsed expressions in the algebra of a space.

#include "eqcohom/expr.hpp"
#include "eqcohom/forgetful.hpp"
#include "eqcohom/grading.hpp"
#include "eqcohom/projective.hpp"
#include "eqcohom/rotation.hpp"
#include "eqcohom/space.hpp"
#include "eqcohom/stiefel.hpp"

#include <string>
#include <variant>

namespace eqcohom {

using Value = std::variant<CoeffElement, SphereElement, ProjElement, TensorElement, RotElement, StiefelElement>;

// The value lives in the algebra of `space`; scalars are promoted.
Value evaluate(const expr::Node& node, const Space& space);
Value evaluate(std::string_view input, const Space& space);

// Canonical text; parses back to an equal value in the same space.
std::string format_value(const Space& space, const Value& v);

ClassicalElement psi_value(const Space& space, const Value& v);

}  // namespace eqcohom
