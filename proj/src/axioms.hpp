#pragma once

// Axiom checks shared by classification and cosupport inference.

#include <optional>

#include "sdl/algebra.hpp"

namespace sdl::axioms {

std::optional<Witness> ehresmann(const BiUnaryAlgebra& S);
/// Requires a plus table.
std::optional<Witness> coehresmann(const BiUnaryAlgebra& S);
/// (x^+)^* = x^+ and (x^*)^+ = x^*. Requires a plus table.
std::optional<Witness> linking(const BiUnaryAlgebra& S);
/// x^* y = y (x y)^*.
std::optional<Witness> restriction_law(const BiUnaryAlgebra& S);
/// x y^+ = (x y)^+ x. Requires a plus table.
std::optional<Witness> corestriction_law(const BiUnaryAlgebra& S);

}  // namespace sdl::axioms
