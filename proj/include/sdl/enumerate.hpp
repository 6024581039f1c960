#pragma once

#include <vector>

#include "sdl/category.hpp"

namespace sdl {

/// All categories with 1..max_objects objects and at most max_arrows arrows
/// (units included), one per isomorphism class, ordered by object count,
/// arrow count and canonical encoding.
std::vector<FinCat> enumerate_categories(int max_objects, int max_arrows);

/// Lexicographically least encoding of C over all relabelings; equal for
/// isomorphic categories.
std::vector<int> canonical_form(const FinCat& C);

}  // namespace sdl
