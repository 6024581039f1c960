#include "sdl/corpus.hpp"

#include "sdl/enumerate.hpp"
#include "sdl/zoo.hpp"

namespace sdl {
namespace {

AlgebraPtr share(BiUnaryAlgebra S) { return std::make_shared<const BiUnaryAlgebra>(std::move(S)); }
CatPtr share(FinCat C) { return std::make_shared<const FinCat>(std::move(C)); }

}  // namespace

std::vector<NamedAlgebra> zoo_semigroups() {
  std::vector<NamedAlgebra> out;
  for (int n = 1; n <= 3; ++n) {
    const std::string k = std::to_string(n);
    out.push_back({"PT_" + k, share(gen_pt(n))});
    out.push_back({"I_" + k, share(gen_i(n))});
    out.push_back({"triangular_" + k, share(gen_triangular(n))});
    out.push_back({"projections_" + k, share(gen_projections(n))});
  }
  return out;
}

std::vector<NamedCategory> zoo_categories() {
  std::vector<NamedCategory> out;
  for (int n = 1; n <= 3; ++n) out.push_back({"K_" + std::to_string(n), share(gen_pair_groupoid(n))});
  out.push_back({"free_arrow", share(gen_free_arrow())});
  for (int n = 1; n <= 3; ++n) out.push_back({"discrete_" + std::to_string(n), share(gen_discrete(n))});
  return out;
}

std::vector<NamedCategory> small_categories() {
  std::vector<NamedCategory> out;
  int i = 0;
  for (FinCat& C : enumerate_categories(3, 5)) {
    out.push_back({"small_" + std::to_string(i++), share(std::move(C))});
  }
  return out;
}

const Corpus& verification_corpus() {
  static const Corpus corpus = [] {
    Corpus c;
    c.semigroups = {{"PT_1", share(gen_pt(1))},
                    {"PT_2", share(gen_pt(2))},
                    {"I_2", share(gen_i(2))},
                    {"triangular_2", share(gen_triangular(2))},
                    {"triangular_3", share(gen_triangular(3))}};
    c.categories = zoo_categories();
    for (auto& nc : small_categories()) c.categories.push_back(std::move(nc));
    return c;
  }();
  return corpus;
}

const std::vector<NamedAlgebra>& property_semigroups() {
  static const std::vector<NamedAlgebra> all = [] {
    std::vector<NamedAlgebra> out = zoo_semigroups();
    for (const auto& [name, C] : verification_corpus().categories) {
      out.push_back({"slices(" + name + ")", slice_semigroup(C).algebra});
      out.push_back({"bislices(" + name + ")", slice_semigroup(C, true).algebra});
    }
    return out;
  }();
  return all;
}

}  // namespace sdl
