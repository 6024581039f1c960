#include <doctest.h>

#include "sdl/morphism.hpp"
#include "sdl/zoo.hpp"

using namespace sdl;

namespace {

AlgebraPtr share(BiUnaryAlgebra S) { return std::make_shared<const BiUnaryAlgebra>(std::move(S)); }

}  // namespace

TEST_CASE("inclusion of partial injections into partial maps has all four types") {
  const auto f = inclusion_by_name(share(gen_i(2)), share(gen_pt(2)));
  for (int type = 1; type <= 4; ++type) {
    const Verdict v = check_morphism(f, type);
    CHECK_MESSAGE(v.pass, "type " << type << ": " << v.witness);
  }
  CHECK(preserves_bideterministic(f).pass);
}

TEST_CASE("identity morphisms have type 4") {
  for (auto S : {share(gen_pt(2)), share(gen_i(3)), share(gen_triangular(3))}) {
    CHECK(check_morphism(identity_morphism(S), 4).pass);
  }
}

TEST_CASE("the constant map to zero is not a morphism of type 1") {
  const auto pt2 = share(gen_pt(2));
  const auto f = make_morphism(pt2, pt2, std::vector<int>(pt2->size(), *pt2->declared_zero()));
  const Verdict v = check_morphism(f, 1);
  CHECK_FALSE(v.pass);
  CHECK(v.witness.find("uncovered projection") != std::string::npos);
}

TEST_CASE("projections inside PT_2: weakly meet-preserving but not proper") {
  const auto f = inclusion_by_name(share(gen_projections(2)), share(gen_pt(2)));
  CHECK(check_morphism(f, 1).pass);
  CHECK(check_morphism(f, 2).pass);
  const Verdict v3 = check_morphism(f, 3);
  CHECK_FALSE(v3.pass);
  CHECK(v3.witness.find("not proper") != std::string::npos);
  CHECK_FALSE(check_morphism(f, 4).pass);
}

TEST_CASE("morphism construction and composition") {
  const auto i2 = share(gen_i(2));
  const auto pt2 = share(gen_pt(2));
  CHECK_THROWS_AS(make_morphism(i2, pt2, {0, 1}), Error);
  CHECK_THROWS_AS(make_morphism(i2, pt2, std::vector<int>(7, 42)), Error);
  const auto f = inclusion_by_name(i2, pt2);
  const auto g = compose(identity_morphism(pt2), f);
  CHECK(g.map == f.map);
  CHECK_THROWS_AS(compose(f, f), Error);
  CHECK_THROWS_AS(check_morphism(f, 5), Error);
}
