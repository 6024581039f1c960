#pragma once

#include "sdl/algebra.hpp"
#include "sdl/category.hpp"
#include "sdl/morphism.hpp"

namespace sdl {

// Partial self-maps of {1..n} are written as value lists, "-" for undefined:
// "[2,-]" sends 1 to 2 and is undefined at 2. Products compose right to
// left, (s·t)(x) = s(t(x)), so s^* is the identity on dom(s) and s^+ the
// identity on ran(s). The empty map comes first and is the declared zero.

/// All partial self-maps (n+1)^n elements. Throws Error{Size, "TooLarge"} for n > 4.
BiUnaryAlgebra gen_pt(int n);
/// Partial injections.
BiUnaryAlgebra gen_i(int n);
/// Partial maps with s(x) >= x on the domain.
BiUnaryAlgebra gen_triangular(int n);
/// Partial identities: a Boolean semilattice with 2^n elements.
BiUnaryAlgebra gen_projections(int n);

/// Pair groupoid on n objects; the arrow "a<y><x>" goes from x to y. n <= 6.
FinCat gen_pair_groupoid(int n);
/// Objects 1, 2; arrows 1_1, 1_2 and f: 1 -> 2.
FinCat gen_free_arrow();
/// n objects and only unit arrows. n <= 6.
FinCat gen_discrete(int n);

/// The map sending each element of S to the element of T with the same name.
/// Throws Error{Input, "BadMorphism"} when a name is missing from T.
SemigroupMorphism inclusion_by_name(AlgebraPtr S, AlgebraPtr T);

}  // namespace sdl
