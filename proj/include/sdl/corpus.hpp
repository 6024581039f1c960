#pragma once

#include <string>
#include <vector>

#include "sdl/algebra.hpp"
#include "sdl/category.hpp"

namespace sdl {

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

struct NamedCategory {
  std::string name;
  CatPtr category;
};

/// PT_n, I_n, triangular_n and projection semilattices for n = 1..3.
std::vector<NamedAlgebra> zoo_semigroups();
/// K_1..K_3, the free arrow, and discrete categories on 1..3 objects.
std::vector<NamedCategory> zoo_categories();
/// Every category with at most 3 objects and 5 arrows, up to isomorphism.
std::vector<NamedCategory> small_categories();

/// The verification corpus: PT_1, PT_2, I_2, triangular_2, triangular_3, the
/// zoo categories and all small categories.
struct Corpus {
  std::vector<NamedAlgebra> semigroups;
  std::vector<NamedCategory> categories;
};

const Corpus& verification_corpus();

/// Zoo semigroups together with the slice and bislice semigroups of every
/// corpus category.
const std::vector<NamedAlgebra>& property_semigroups();

}  // namespace sdl
