#pragma once

#include <optional>
#include <vector>

#include "sdl/algebra.hpp"
#include "sdl/category.hpp"
#include "sdl/cofunctor.hpp"
#include "sdl/morphism.hpp"
#include "sdl/report.hpp"

namespace sdl {

/// Category of germs of a finite preBoolean restriction semigroup with local units.
///
/// Objects are the atoms of P(S). The germ of s at the character of atom a is
/// represented by the element s·a, so arrows are the elements whose support
/// is an atom.
struct GermCategory {
  AlgebraPtr base;
  CatPtr category;
  std::vector<int> atoms;          // object -> atom element
  std::vector<int> arrow_element;  // arrow -> element
  std::vector<int> object_of;      // element -> object, -1 unless an atom
  std::vector<int> germ_index;     // element -> arrow, -1 unless support is an atom
};

/// Throws Error{Precondition, "NotPreBoolean"} or Error{Precondition, "NoLocalUnits"}.
GermCategory germ_category(AlgebraPtr S);

/// Θ(s) = {s·a : a an atom below s^*} as a set of germ arrows.
/// Throws Error{Input, "UnknownElement"}.
ArrowSet theta(const GermCategory& G, int s);

struct UnitEta {
  GermCategory germs;
  SliceSemigroup slices;
  SemigroupMorphism eta;  // S -> slices.algebra
};

UnitEta unit_eta(AlgebraPtr S, std::optional<long> max_size = std::nullopt);
UnitEta unit_eta(GermCategory G, std::optional<long> max_size = std::nullopt);

struct Counit {
  CatPtr category;
  SliceSemigroup slices;  // of `category`
  GermCategory germs;     // of slices.algebra
  Cofunctor epsilon;      // germs.category ⇝ category
};

Counit counit_epsilon(CatPtr C, std::optional<long> max_size = std::nullopt);

/// The cofunctor germ(S) ⇝ germ(T) induced by a type 1 morphism S -> T.
/// Throws Error{Precondition, "NotAMorphism"}.
Cofunctor morphism_to_cofunctor(const SemigroupMorphism& f, const GermCategory& GS,
                                const GermCategory& GT);
Cofunctor morphism_to_cofunctor(const SemigroupMorphism& f);

/// Semigroup instance: η_S, ε at germ(S), and both triangle identities.
Report verify_adjunction(AlgebraPtr S, std::optional<long> max_size = std::nullopt);
/// Category instance: η at the slice semigroup, ε_C, and both triangle identities.
Report verify_adjunction(CatPtr C, std::optional<long> max_size = std::nullopt);

/// η_S corestricted to the bideterministic part of its codomain is a
/// (2,1,1)-isomorphism. Throws Error{Precondition, "NotBooleanBirestriction"}.
Report verify_birestriction_equivalence(AlgebraPtr S, std::optional<long> max_size = std::nullopt);

Report verify_groupoidal(AlgebraPtr S, std::optional<long> max_size = std::nullopt);
Report verify_groupoidal(CatPtr C, std::optional<long> max_size = std::nullopt);

}  // namespace sdl
