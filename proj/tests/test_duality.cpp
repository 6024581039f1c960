#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sdl/corpus.hpp"
#include "sdl/duality.hpp"
#include "sdl/zoo.hpp"

using namespace sdl;

namespace {

AlgebraPtr share(BiUnaryAlgebra S) { return std::make_shared<const BiUnaryAlgebra>(std::move(S)); }
CatPtr share(FinCat C) { return std::make_shared<const FinCat>(std::move(C)); }

std::string error_code(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// Projections 0 < e < 1: P(S) is a chain, so not generalized Boolean over its atoms.
AlgebraPtr chain3() {
  const std::vector<std::vector<int>> mult = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  return share(make_algebra({"0", "e", "1"}, mult, {0, 1, 2}, std::vector<int>{0, 1, 2}, 0));
}

int popcount(ArrowSet a) { return std::popcount(a); }

}  // namespace

TEST_CASE("germ categories of the running examples") {
  const GermCategory g2 = germ_category(share(gen_pt(2)));
  CHECK(g2.category->num_objects() == 2);
  CHECK(g2.category->num_arrows() == 4);
  CHECK(iso_categories(*g2.category, gen_pair_groupoid(2)).has_value());
  CHECK(iso_categories(*germ_category(share(gen_pt(3))).category, gen_pair_groupoid(3)).has_value());
  CHECK(iso_categories(*germ_category(share(gen_i(2))).category, gen_pair_groupoid(2)).has_value());
  CHECK(iso_categories(*germ_category(share(gen_triangular(2))).category, gen_free_arrow())
            .has_value());
  CHECK(iso_categories(*germ_category(share(gen_projections(3))).category, gen_discrete(3))
            .has_value());
}

TEST_CASE("germ relation against partial maps") {
  // Germs of s and t at x coincide exactly when s(x) = t(x).
  const auto S = share(gen_pt(3));
  const GermCategory G = germ_category(S);
  REQUIRE(G.atoms.size() == 3);
  std::vector<int> point(3);
  for (int o = 0; o < 3; ++o) {
    const oracle::PMap a = oracle::parse(S->name(G.atoms[o]));
    const auto it = std::find_if(a.begin(), a.end(), [](int v) { return v != 0; });
    REQUIRE(it != a.end());
    point[o] = *it;
    CHECK(std::count(a.begin(), a.end(), 0) == 2);
  }
  for (int s = 0; s < S->size(); ++s) {
    const oracle::PMap ms = oracle::parse(S->name(s));
    int expected = 0;
    for (int o = 0; o < 3; ++o) {
      const int x = point[o];
      const int germ = G.germ_index[S->mul(s, G.atoms[o])];
      if (ms[x - 1] == 0) {
        CHECK(S->mul(s, G.atoms[o]) == *S->declared_zero());
        continue;
      }
      ++expected;
      REQUIRE(germ >= 0);
      CHECK(G.category->dom(germ) == o);
      CHECK(point[G.category->cod(germ)] == ms[x - 1]);
      for (int t = 0; t < S->size(); ++t) {
        const oracle::PMap mt = oracle::parse(S->name(t));
        if (mt[x - 1] == 0) continue;
        CHECK((G.germ_index[S->mul(t, G.atoms[o])] == germ) == (mt[x - 1] == ms[x - 1]));
      }
    }
    CHECK(popcount(theta(G, s)) == expected);
  }
}

TEST_CASE("theta") {
  const auto S = share(gen_pt(2));
  const GermCategory G = germ_category(S);
  CHECK(theta(G, *S->declared_zero()) == 0);
  const int swap = *S->index_of("[2,1]");
  const ArrowSet th = theta(G, swap);
  CHECK(popcount(th) == 2);
  CHECK(is_bislice(*G.category, th));
  const int constant = *S->index_of("[1,1]");
  CHECK(is_local_section(*G.category, theta(G, constant)));
  CHECK_FALSE(is_bislice(*G.category, theta(G, constant)));
  CHECK(error_code([&] { theta(G, 99); }) == "UnknownElement");
}

TEST_CASE("germ category preconditions") {
  CHECK(error_code([] { germ_category(chain3()); }) == "NotPreBoolean");
}

TEST_CASE("unit") {
  const UnitEta pt2 = unit_eta(share(gen_pt(2)));
  CHECK(pt2.slices.algebra->size() == 9);
  CHECK(check_morphism(pt2.eta, 1).pass);
  std::vector<int> image = pt2.eta.map;
  std::sort(image.begin(), image.end());
  CHECK(std::unique(image.begin(), image.end()) == image.end());
  CHECK(image.size() == 9);

  const UnitEta i2 = unit_eta(share(gen_i(2)));
  CHECK(i2.slices.algebra->size() == 9);
  std::vector<int> img = i2.eta.map;
  std::sort(img.begin(), img.end());
  CHECK(std::unique(img.begin(), img.end()) == img.end());
  CHECK(img.size() == 7);
  for (int s = 0; s < i2.eta.source->size(); ++s) {
    CHECK(is_bislice(*i2.germs.category, i2.slices.slices[i2.eta(s)]));
  }
}

TEST_CASE("counit is an isomorphism") {
  for (const auto& [name, C] : zoo_categories()) {
    const Counit E = counit_epsilon(C);
    CHECK_MESSAGE(is_isomorphism(E.epsilon), name);
    CHECK_MESSAGE(iso_categories(*E.germs.category, *C).has_value(), name);
  }
}

TEST_CASE("morphisms to cofunctors") {
  const auto i2 = share(gen_i(2));
  const auto pt2 = share(gen_pt(2));
  const auto f = inclusion_by_name(i2, pt2);
  const Cofunctor F = morphism_to_cofunctor(f);
  CHECK(is_isomorphism(F));
  CHECK(same_cofunctor(morphism_to_cofunctor(identity_morphism(pt2)),
                       identity_cofunctor(germ_category(pt2).category)));
  const auto zero = make_morphism(pt2, pt2, std::vector<int>(pt2->size(), *pt2->declared_zero()));
  CHECK(error_code([&] { morphism_to_cofunctor(zero); }) == "NotAMorphism");
}

TEST_CASE("adjunction reports") {
  for (auto S : {share(gen_pt(2)), share(gen_i(2)), share(gen_triangular(2))}) {
    const Report r = verify_adjunction(S);
    CHECK_MESSAGE(r.ok(), r.str());
    CHECK(r.find("triangle_cofunctor") != nullptr);
    CHECK(r.find("triangle_morphism") != nullptr);
  }
  const Report i2 = verify_adjunction(share(gen_i(2)));
  REQUIRE(i2.find("eta_iso") != nullptr);
  CHECK(i2.find("eta_iso")->detail == "false");
  const Report pt2 = verify_adjunction(share(gen_pt(2)));
  CHECK(pt2.find("eta_iso")->detail == "true");
  for (auto C : {share(gen_pair_groupoid(2)), share(gen_free_arrow()), share(gen_discrete(2))}) {
    const Report r = verify_adjunction(C);
    CHECK_MESSAGE(r.ok(), r.str());
  }
}

TEST_CASE("birestriction equivalence") {
  const Report r = verify_birestriction_equivalence(share(gen_i(2)));
  CHECK_MESSAGE(r.ok(), r.str());
  CHECK(verify_birestriction_equivalence(share(gen_i(3))).ok());
  CHECK(error_code([] { verify_birestriction_equivalence(share(gen_pt(2))); }) ==
        "NotBooleanBirestriction");
}

TEST_CASE("groupoidal correspondence") {
  CHECK(verify_groupoidal(share(gen_i(2))).ok());
  CHECK(verify_groupoidal(share(gen_pt(2))).ok());
  CHECK(verify_groupoidal(share(gen_triangular(2))).ok());
  CHECK(verify_groupoidal(share(gen_pair_groupoid(2))).ok());
  CHECK(verify_groupoidal(share(gen_free_arrow())).ok());
}
