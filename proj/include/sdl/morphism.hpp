#pragma once

#include <optional>
#include <vector>

#include "sdl/algebra.hpp"
#include "sdl/report.hpp"

namespace sdl {

/// A map between finite biunary semigroups given by its table.
struct SemigroupMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<int> map;  // source index -> target index

  int operator()(int s) const { return map[s]; }
};

/// Validates totality and index ranges. Throws Error{Input, "BadMorphism"}.
SemigroupMorphism make_morphism(AlgebraPtr source, AlgebraPtr target, std::vector<int> map);
SemigroupMorphism identity_morphism(AlgebraPtr S);
/// g after f. Throws Error{Input, "CompositionMismatch"} when f's target is not g's source.
SemigroupMorphism compose(const SemigroupMorphism& g, const SemigroupMorphism& f);

/// Morphism types:
///   1  (2,1)-homomorphism (also preserving ^+ when both sides carry it) whose
///      restriction to projections is a proper morphism of generalized Boolean algebras;
///   2  type 1 and weakly meet-preserving;
///   3  type 1 and proper: every t is the join of {u <= t : u <= f(s) for some s};
///   4  types 2 and 3.
Verdict check_morphism(const SemigroupMorphism& f, int type);

/// True when f maps bideterministic elements to bideterministic elements.
Verdict preserves_bideterministic(const SemigroupMorphism& f);

/// True when both algebras carry identical mult, star and plus tables.
bool same_tables(const BiUnaryAlgebra& a, const BiUnaryAlgebra& b);

}  // namespace sdl
