#include <doctest.h>

#include "sdl/category.hpp"
#include "sdl/kernels.hpp"
#include "sdl/zoo.hpp"

using namespace sdl;

TEST_CASE("pair and triple scans agree on the first counterexample") {
  for (int n : {1, 7, 40}) {
    for (int target = 0; target < n * n; target += 5) {
      auto fails = [&](int i, int j) { return i * n + j >= target && (i + j) % 3 == 0; };
      CHECK(serial::first_pair(n, fails) == parallel::first_pair(n, fails));
    }
    auto never = [](int, int) { return false; };
    CHECK_FALSE(parallel::first_pair(n, never).has_value());
    auto triple = [&](int i, int j, int k) { return (i * 7 + j * 3 + k) % 11 == 5 && i >= n / 2; };
    CHECK(serial::first_triple(n, triple) == parallel::first_triple(n, triple));
  }
}

TEST_CASE("associativity kernels") {
  for (auto S : {gen_pt(2), gen_pt(3), gen_i(3), gen_triangular(3)}) {
    const auto& mult = S.tables().mult;
    CHECK_FALSE(serial::first_associativity_failure(mult, S.size()).has_value());
    CHECK_FALSE(parallel::first_associativity_failure(mult, S.size()).has_value());
  }
  // Left-projection table with one corrupted entry.
  const int n = 6;
  std::vector<int> mult(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mult[i * n + j] = i;
  }
  mult[3 * n + 4] = 2;
  const auto s = serial::first_associativity_failure(mult, n);
  REQUIRE(s.has_value());
  CHECK(s == parallel::first_associativity_failure(mult, n));
}

TEST_CASE("join tables") {
  for (auto S : {gen_pt(2), gen_pt(3), gen_i(3), gen_projections(4)}) {
    CHECK(serial::join_table(S) == parallel::join_table(S));
  }
}

TEST_CASE("slice product tables") {
  for (auto C : {gen_pair_groupoid(3), gen_free_arrow(), gen_discrete(4)}) {
    const auto shared = std::make_shared<const FinCat>(C);
    const SliceSemigroup SC = slice_semigroup(shared);
    CHECK(serial::slice_product_table(C, SC.slices) == parallel::slice_product_table(C, SC.slices));
  }
}
