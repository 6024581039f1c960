#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sdl/algebra.hpp"
#include "sdl/corpus.hpp"
#include "sdl/zoo.hpp"

using namespace sdl;

namespace {

int at(const BiUnaryAlgebra& S, const std::string& name) {
  auto i = S.index_of(name);
  REQUIRE_MESSAGE(i.has_value(), name);
  return *i;
}

std::vector<std::string> names_of(const BiUnaryAlgebra& S, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(S.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted_names(const BiUnaryAlgebra& S) {
  auto out = S.names();
  std::sort(out.begin(), out.end());
  return out;
}

// Relabels S by a permutation p (old index -> new index).
BiUnaryAlgebra permuted(const BiUnaryAlgebra& S, const std::vector<int>& p) {
  const int n = S.size();
  AlgebraTables t;
  t.names.resize(n);
  t.mult.resize(static_cast<std::size_t>(n) * n);
  t.star.resize(n);
  t.plus.emplace(n);
  for (int i = 0; i < n; ++i) {
    t.names[p[i]] = S.name(i);
    t.star[p[i]] = p[S.star(i)];
    (*t.plus)[p[i]] = p[S.plus(i)];
    for (int j = 0; j < n; ++j) t.mult[static_cast<std::size_t>(p[i]) * n + p[j]] = p[S.mul(i, j)];
  }
  return make_algebra(std::move(t));
}

// Tables of a generated partial-map algebra agree with direct composition.
void check_against_oracle(const BiUnaryAlgebra& S) {
  for (int i = 0; i < S.size(); ++i) {
    const auto s = oracle::parse(S.name(i));
    CHECK(S.name(S.star(i)) == oracle::show(oracle::dom_id(s)));
    CHECK(S.name(S.plus(i)) == oracle::show(oracle::ran_id(s)));
    for (int j = 0; j < S.size(); ++j) {
      const auto t = oracle::parse(S.name(j));
      CHECK(S.name(S.mul(i, j)) == oracle::show(oracle::compose(s, t)));
    }
  }
}

}  // namespace

TEST_CASE("generators match direct enumeration of partial maps") {
  for (int n = 1; n <= 3; ++n) {
    const auto pt = gen_pt(n);
    const auto in = gen_i(n);
    const auto tri = gen_triangular(n);
    long pt_count = 1, tri_count = 1;
    for (int x = 1; x <= n; ++x) {
      pt_count *= n + 1;
      tri_count *= n - x + 2;
    }
    CHECK(pt.size() == pt_count);
    CHECK(in.size() == oracle::count_partial_injections(n));
    CHECK(tri.size() == tri_count);
    check_against_oracle(pt);
    check_against_oracle(in);
    check_against_oracle(tri);
    CHECK(pt.declared_zero() == 0);
  }
  CHECK(gen_pt(2).size() == 9);
  CHECK(gen_i(2).size() == 7);
  CHECK(gen_pt(1).size() == 2);
  CHECK(gen_triangular(2).size() == 6);
  CHECK(sorted_names(gen_triangular(1)) == sorted_names(gen_pt(1)));
  CHECK_THROWS_AS(gen_pt(5), Error);
}

TEST_CASE("make_algebra validation") {
  try {
    make_algebra({"a", "b"}, {{1, 1}, {0, 0}}, {0, 1});
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAssociative");
    CHECK(e.kind() == ErrorKind::Axiom);
  }
  try {
    make_algebra({"a", "b"}, {{0, 1}}, {0, 1});
    FAIL("expected BadTableShape");
  } catch (const Error& e) {
    CHECK(e.code() == "BadTableShape");
  }
  try {
    make_algebra({"a", "b"}, {{0, 5}, {0, 0}}, {0, 1});
    FAIL("expected BadTableShape");
  } catch (const Error& e) {
    CHECK(e.code() == "BadTableShape");
  }
  // A declared zero must absorb.
  try {
    make_algebra({"a", "b"}, {{0, 1}, {1, 1}}, {0, 1}, std::nullopt, 0);
    FAIL("expected BadZero");
  } catch (const Error& e) {
    CHECK(e.code() == "BadZero");
  }
}

TEST_CASE("classification of the running examples") {
  const auto pt2 = gen_pt(2);
  const auto c = classify(pt2);
  CHECK(c.ehresmann.value);
  CHECK(c.restriction.value);
  CHECK(c.range.value);
  CHECK_FALSE(c.corestriction.value);
  REQUIRE(c.corestriction.witness.has_value());
  // The witness really violates x y^+ = (x y)^+ x.
  const auto& w = c.corestriction.witness->args;
  REQUIRE(w.size() == 2);
  CHECK(pt2.mul(w[0], pt2.plus(w[1])) != pt2.mul(pt2.plus(pt2.mul(w[0], w[1])), w[0]));
  CHECK(c.boolean_restriction.value);

  const auto i2 = gen_i(2);
  const auto ci = classify(i2);
  CHECK(ci.boolean_birestriction.value);
  CHECK_FALSE(ci.boolean_restriction.value);
  REQUIRE(ci.boolean_restriction.witness.has_value());
  CHECK(ci.boolean_restriction.witness->args == std::vector<int>{at(i2, "[1,-]"), at(i2, "[-,1]")});
  CHECK(ci.inverse.value);

  const auto tri = gen_triangular(2);
  const auto ct = classify(tri);
  CHECK(ct.etale_range.value);
  CHECK_FALSE(ct.groupoidal_etale.value);
}

TEST_CASE("etale and groupoidal flags agree with graph unions") {
  // In a subalgebra of PT_n the join of bounded maps is their graph union, so
  // each flag can be recomputed from lower bounds directly.
  for (const auto& S : {gen_pt(2), gen_triangular(2), gen_triangular(3), gen_pt(3)}) {
    const auto c = classify(S);
    auto unions_cover = [&](auto in_pool) {
      for (int s = 0; s < S.size(); ++s) {
        const auto ms = oracle::parse(S.name(s));
        oracle::PMap acc(ms.size(), 0);
        for (int u = 0; u < S.size(); ++u) {
          const auto mu = oracle::parse(S.name(u));
          if (in_pool(mu) && oracle::restricts(mu, ms)) {
            for (std::size_t x = 0; x < mu.size(); ++x) {
              if (mu[x]) acc[x] = mu[x];
            }
          }
        }
        if (acc != ms) return false;
      }
      return true;
    };
    // Bideterministic elements of these algebras are the injective maps; partial
    // isomorphisms are the injective maps whose inverse is also present.
    CHECK(c.etale_range.value == unions_cover([](const oracle::PMap& m) { return oracle::injective(m); }));
    CHECK(c.groupoidal_etale.value == unions_cover([&](const oracle::PMap& m) {
            if (!oracle::injective(m)) return false;
            oracle::PMap inv(m.size(), 0);
            for (std::size_t x = 0; x < m.size(); ++x) {
              if (m[x]) inv[m[x] - 1] = static_cast<int>(x) + 1;
            }
            return S.index_of(oracle::show(inv)).has_value();
          }));
  }
}

TEST_CASE("projections") {
  const auto pt2 = gen_pt(2);
  CHECK(names_of(pt2, projections(pt2)) ==
        std::vector<std::string>{"[-,-]", "[-,2]", "[1,-]", "[1,2]"});
  const auto i2 = gen_i(2);
  CHECK(names_of(i2, projections(i2)) == names_of(pt2, projections(pt2)));
  const auto sl = gen_projections(3);
  CHECK(projections(sl).size() == static_cast<std::size_t>(sl.size()));

  const auto pt1 = gen_pt(1);
  const auto bad = pt1.with_plus(std::vector<int>{1, 1});
  try {
    projections(bad);
    FAIL("expected PlusStarMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "PlusStarMismatch");
  }
}

TEST_CASE("natural partial orders") {
  const auto pt2 = gen_pt(2);
  CHECK(nat_leq(pt2, at(pt2, "[1,-]"), at(pt2, "[1,2]")));
  CHECK_FALSE(nat_leq(pt2, at(pt2, "[1,2]"), at(pt2, "[1,-]")));
  // Oracle: s <= t iff s is a restriction of t.
  for (int s = 0; s < pt2.size(); ++s) {
    for (int t = 0; t < pt2.size(); ++t) {
      CHECK(nat_leq(pt2, s, t) ==
            oracle::restricts(oracle::parse(pt2.name(s)), oracle::parse(pt2.name(t))));
    }
  }
  const auto i2 = gen_i(2);
  int pairs = 0;
  for (int s = 0; s < i2.size(); ++s) {
    for (int t = 0; t < i2.size(); ++t) {
      CHECK(nat_leq(i2, s, t, Side::Star) == nat_leq(i2, s, t, Side::Plus));
      ++pairs;
    }
  }
  CHECK(pairs == 49);
  const auto star_only = i2.with_plus(std::nullopt);
  try {
    nat_leq(star_only, 0, 1, Side::Plus);
    FAIL("expected NoPlusTable");
  } catch (const Error& e) {
    CHECK(e.code() == "NoPlusTable");
  }
}

TEST_CASE("compatibility relations") {
  const auto pt2 = gen_pt(2);
  const int s = at(pt2, "[1,-]");
  const int t = at(pt2, "[-,1]");
  const int u = at(pt2, "[2,-]");
  CHECK(compatible(pt2, s, t, Compat::Right));
  CHECK_FALSE(compatible(pt2, s, t, Compat::Bi));
  CHECK(compatible(pt2, s, u, Compat::Left));
  CHECK_FALSE(compatible(pt2, s, u, Compat::Bi));
  for (int x = 0; x < pt2.size(); ++x) {
    CHECK(compatible(pt2, x, x, Compat::Right));
    CHECK(compatible(pt2, x, x, Compat::Left));
    CHECK(compatible(pt2, x, x, Compat::Bi));
  }
}

TEST_CASE("joins and meets") {
  const auto pt2 = gen_pt(2);
  CHECK(join(pt2, at(pt2, "[1,-]"), at(pt2, "[-,1]")) == at(pt2, "[1,1]"));
  const auto i2 = gen_i(2);
  CHECK_FALSE(join(i2, at(i2, "[1,-]"), at(i2, "[-,1]")).has_value());
  CHECK(meet(pt2, at(pt2, "[1,1]"), at(pt2, "[1,2]")) == at(pt2, "[1,-]"));
  for (int x = 0; x < pt2.size(); ++x) {
    CHECK(join(pt2, x, x) == x);
    CHECK(meet(pt2, x, x) == x);
  }
  for (int e : pt2.projection_list()) {
    for (int f : pt2.projection_list()) CHECK(meet(pt2, e, f) == pt2.mul(e, f));
  }
  // Oracle: in PT_n the join of two maps is their graph union when that is a map.
  const auto pt3 = gen_pt(3);
  for (int s = 0; s < pt3.size(); ++s) {
    for (int t = 0; t < pt3.size(); ++t) {
      const auto a = oracle::parse(pt3.name(s));
      const auto b = oracle::parse(pt3.name(t));
      oracle::PMap u(a.size(), 0);
      bool ok = true;
      for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] && b[x] && a[x] != b[x]) ok = false;
        u[x] = a[x] ? a[x] : b[x];
      }
      const auto j = join(pt3, s, t);
      CHECK(j.has_value() == ok);
      if (ok && j) CHECK(pt3.name(*j) == oracle::show(u));
    }
  }
}

TEST_CASE("deterministic and bideterministic elements") {
  const auto pt2 = gen_pt(2);
  const auto d = deterministic_sets(pt2);
  CHECK(d.deterministic.size() == 9);
  CHECK(names_of(pt2, d.bideterministic) == sorted_names(gen_i(2)));

  const auto tri = gen_triangular(2);
  const auto dt = deterministic_sets(tri);
  CHECK(dt.bideterministic.size() == 5);
  for (int b : dt.bideterministic) CHECK(oracle::injective(oracle::parse(tri.name(b))));

  const auto sl = gen_projections(2);
  CHECK(deterministic_sets(sl).bideterministic.size() == static_cast<std::size_t>(sl.size()));

  for (const auto& [name, S] : zoo_semigroups()) {
    if (classify(*S).restriction.value) {
      CHECK_MESSAGE(deterministic_sets(*S).deterministic.size() == static_cast<std::size_t>(S->size()),
                    name);
    }
  }
}

TEST_CASE("bideterministic subalgebra") {
  const auto pt2 = gen_pt(2);
  const auto i2 = gen_i(2);
  const Subalgebra bd = bd_subalgebra(pt2);
  CHECK(bd.algebra.size() == 7);
  CHECK(iso_algebras(bd.algebra, i2).has_value());
  CHECK(bd_subalgebra(i2).embedding.size() == 7);

  const Subalgebra bt = bd_subalgebra(gen_triangular(2));
  CHECK(classify(bt.algebra).birestriction.value);
  CHECK(bt.algebra.projection_list().size() == 4);

  try {
    bd_subalgebra(pt2.with_plus(std::nullopt));
    FAIL("expected NoPlusTable");
  } catch (const Error& e) {
    CHECK(e.code() == "NoPlusTable");
  }
}

TEST_CASE("partial isomorphisms") {
  const auto pt2 = gen_pt(2);
  const auto pi = partial_isomorphisms(pt2);
  CHECK(names_of(pt2, pi.elements) == sorted_names(gen_i(2)));
  CHECK(pi.inverse_semigroup);

  const auto tri2 = gen_triangular(2);
  CHECK(names_of(tri2, partial_isomorphisms(tri2).elements) == names_of(pt2, pt2.projection_list()));
  const auto tri3 = gen_triangular(3);
  const auto pi3 = partial_isomorphisms(tri3);
  CHECK(pi3.elements.size() == 8);
  const auto pt3 = gen_pt(3);
  CHECK(names_of(tri3, pi3.elements) == names_of(pt3, pt3.projection_list()));

  for (int e : pt2.projection_list()) CHECK(pi.partner[e] == e);
}

TEST_CASE("cosupport inference recovers stored tables") {
  for (const auto& [name, S] : zoo_semigroups()) {
    const auto inferred = infer_cosupport(S->with_plus(std::nullopt));
    REQUIRE_MESSAGE(inferred.plus.has_value(), name);
    CHECK_MESSAGE(*inferred.plus == *S->tables().plus, name);
  }
  // Without local units there is nothing to infer.
  const auto no_units = make_algebra({"e", "x"}, {{0, 0}, {0, 0}}, {0, 0});
  try {
    infer_cosupport(no_units);
    FAIL("expected NoLeftUnit");
  } catch (const Error& e) {
    CHECK(e.code() == "NoLeftUnit");
  }
}

TEST_CASE("algebra isomorphism search") {
  const auto pt2 = gen_pt(2);
  CHECK_FALSE(iso_algebras(pt2, gen_i(2)).has_value());
  std::vector<int> p(pt2.size());
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(7);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(p.begin(), p.end(), rng);
    const auto shuffled = permuted(pt2, p);
    const auto iso = iso_algebras(pt2, shuffled);
    REQUIRE(iso.has_value());
    for (int i = 0; i < pt2.size(); ++i) {
      CHECK(shuffled.star((*iso)[i]) == (*iso)[pt2.star(i)]);
      for (int j = 0; j < pt2.size(); ++j) {
        CHECK(shuffled.mul((*iso)[i], (*iso)[j]) == (*iso)[pt2.mul(i, j)]);
      }
    }
  }
  CHECK_FALSE(iso_algebras(gen_triangular(3), gen_i(3)).has_value());
}

TEST_CASE("describe renders witnesses with element names") {
  const auto pt2 = gen_pt(2);
  CHECK(describe(pt2, Witness{"rule", {at(pt2, "[1,-]"), at(pt2, "[-,1]")}}) == "rule([1,-],[-,1])");
  CHECK(describe(pt2, Witness{"MissingZeroProjection", {}}) == "MissingZeroProjection");
}
