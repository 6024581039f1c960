#include "sdl/cofunctor.hpp"

#include <bit>

namespace sdl {
namespace {

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  const auto& x = a->tables();
  const auto& y = b->tables();
  return x.dom == y.dom && x.cod == y.cod && x.units == y.units && x.comp == y.comp;
}

[[noreturn]] void law_fail(const Cofunctor& F, const std::string& law, int s, int x) {
  fail(ErrorKind::Axiom, "CofunctorAxiom",
       law + "(" + F.source()->arrow_name(s) + "," + F.target()->object_name(x) + ")");
}

}  // namespace

Cofunctor make_cofunctor(CatPtr Cp, CatPtr Dp, CofunctorTables t) {
  const FinCat& C = *Cp;
  const FinCat& D = *Dp;
  const int m = C.num_arrows();
  const int k = D.num_objects();
  if (t.anchor.size() != static_cast<std::size_t>(k)) {
    fail(ErrorKind::Input, "BadTableShape", "anchor needs one entry per target object");
  }
  if (t.mu.size() != static_cast<std::size_t>(m) * k ||
      t.rho1.size() != static_cast<std::size_t>(m) * k) {
    fail(ErrorKind::Input, "BadTableShape", "mu and rho1 must be source arrows x target objects");
  }
  for (int a : t.anchor) {
    if (a < 0 || a >= C.num_objects()) fail(ErrorKind::Input, "BadTableShape", "anchor out of range");
  }
  for (int s = 0; s < m; ++s) {
    for (int x = 0; x < k; ++x) {
      const std::size_t i = static_cast<std::size_t>(s) * k + x;
      const bool def = C.dom(s) == t.anchor[x];
      const bool mu_ok = def ? (t.mu[i] >= 0 && t.mu[i] < k) : t.mu[i] == -1;
      const bool rho_ok = def ? (t.rho1[i] >= 0 && t.rho1[i] < D.num_arrows()) : t.rho1[i] == -1;
      if (!mu_ok || !rho_ok) {
        fail(ErrorKind::Input, "BadTableShape",
             "entry (" + C.arrow_name(s) + "," + D.object_name(x) + ") does not match d(s) = f(x)");
      }
    }
  }

  Cofunctor F;
  F.c_ = std::move(Cp);
  F.d_ = std::move(Dp);
  F.t_ = std::move(t);

  for (int s = 0; s < m; ++s) {
    for (int x = 0; x < k; ++x) {
      if (!F.defined(s, x)) continue;
      const int y = F.mu(s, x);
      const int a = F.rho1(s, x);
      if (F.anchor(y) != C.cod(s)) law_fail(F, "A1", s, x);
      if (D.dom(a) != x || D.cod(a) != y) law_fail(F, "rho-ends", s, x);
    }
  }
  for (int x = 0; x < k; ++x) {
    const int u = C.unit(F.anchor(x));
    if (F.mu(u, x) != x) law_fail(F, "A3", u, x);
    if (F.rho1(u, x) != D.unit(x)) law_fail(F, "rho-unit", u, x);
  }
  for (int s = 0; s < m; ++s) {
    for (int t2 = 0; t2 < m; ++t2) {
      const int st = C.comp(s, t2);
      if (st < 0) continue;
      for (int x = 0; x < k; ++x) {
        if (!F.defined(t2, x)) continue;
        const int tx = F.mu(t2, x);
        if (F.mu(s, tx) != F.mu(st, x)) law_fail(F, "A2", st, x);
        if (D.comp(F.rho1(s, tx), F.rho1(t2, x)) != F.rho1(st, x)) law_fail(F, "rho-comp", st, x);
      }
    }
  }
  return F;
}

Cofunctor identity_cofunctor(CatPtr Cp) {
  const FinCat& C = *Cp;
  const int k = C.num_objects();
  CofunctorTables t;
  for (int x = 0; x < k; ++x) t.anchor.push_back(x);
  t.mu.assign(static_cast<std::size_t>(C.num_arrows()) * k, -1);
  t.rho1.assign(t.mu.size(), -1);
  for (int s = 0; s < C.num_arrows(); ++s) {
    const std::size_t i = static_cast<std::size_t>(s) * k + C.dom(s);
    t.mu[i] = C.cod(s);
    t.rho1[i] = s;
  }
  return make_cofunctor(Cp, Cp, std::move(t));
}

Cofunctor compose_cofunctors(const Cofunctor& G, const Cofunctor& F) {
  if (!same_category(F.target(), G.source())) {
    fail(ErrorKind::Input, "CompositionMismatch", "middle categories differ");
  }
  const FinCat& C = *F.source();
  const FinCat& E = *G.target();
  const int k = E.num_objects();
  CofunctorTables t;
  for (int x = 0; x < k; ++x) t.anchor.push_back(F.anchor(G.anchor(x)));
  t.mu.assign(static_cast<std::size_t>(C.num_arrows()) * k, -1);
  t.rho1.assign(t.mu.size(), -1);
  for (int s = 0; s < C.num_arrows(); ++s) {
    for (int x = 0; x < k; ++x) {
      if (C.dom(s) != t.anchor[x]) continue;
      const int lifted = F.rho1(s, G.anchor(x));
      const std::size_t i = static_cast<std::size_t>(s) * k + x;
      t.mu[i] = G.mu(lifted, x);
      t.rho1[i] = G.rho1(lifted, x);
    }
  }
  return make_cofunctor(F.source(), G.target(), std::move(t));
}

bool same_cofunctor(const Cofunctor& F, const Cofunctor& G) {
  return same_category(F.source(), G.source()) && same_category(F.target(), G.target()) &&
         F.tables().anchor == G.tables().anchor && F.tables().mu == G.tables().mu &&
         F.tables().rho1 == G.tables().rho1;
}

CofunctorFlags check_cofunctor(const Cofunctor& F) {
  const FinCat& C = *F.source();
  const FinCat& D = *F.target();
  const int k = D.num_objects();
  CofunctorFlags out;
  out.injective_on_arrows = {true, std::nullopt};
  out.action_injective = {true, std::nullopt};

  std::vector<std::pair<int, int>> preimage(D.num_arrows(), {-1, -1});
  for (int s = 0; s < C.num_arrows(); ++s) {
    for (int x = 0; x < k; ++x) {
      if (!F.defined(s, x)) continue;
      auto& p = preimage[F.rho1(s, x)];
      if (p.first >= 0) {
        if (out.injective_on_arrows.value) {
          out.injective_on_arrows = {false, Witness{"rho1 collision", {p.first, p.second, s, x}}};
        }
      } else {
        p = {s, x};
      }
      for (int y = x + 1; y < k && out.action_injective.value; ++y) {
        if (F.defined(s, y) && F.mu(s, x) == F.mu(s, y)) {
          out.action_injective = {false, Witness{"action collision", {s, x, y}}};
        }
      }
    }
  }
  out.surjective_on_arrows = {true, std::nullopt};
  for (int a = 0; a < D.num_arrows(); ++a) {
    if (preimage[a].first < 0) {
      out.surjective_on_arrows = {false, Witness{"arrow not in image", {a}}};
      break;
    }
  }
  if (!out.injective_on_arrows.value) {
    out.bijective_on_arrows = out.injective_on_arrows;
  } else {
    out.bijective_on_arrows = out.surjective_on_arrows;
  }
  return out;
}

Verdict is_isomorphism(const Cofunctor& F) {
  const FinCat& C = *F.source();
  const FinCat& D = *F.target();
  const int k = D.num_objects();
  if (k != C.num_objects()) return Verdict::failed("object counts differ");
  std::vector<int> inv(k, -1);
  for (int x = 0; x < k; ++x) {
    if (inv[F.anchor(x)] >= 0) return Verdict::failed("anchor not injective at " + D.object_name(x));
    inv[F.anchor(x)] = x;
  }
  const CofunctorFlags flags = check_cofunctor(F);
  if (!flags.bijective_on_arrows.value) return Verdict::failed(flags.bijective_on_arrows.witness->rule);
  for (int s = 0; s < C.num_arrows(); ++s) {
    for (int x = 0; x < k; ++x) {
      if (F.defined(s, x) && F.mu(s, x) != inv[C.cod(s)]) {
        return Verdict::failed("action (" + C.arrow_name(s) + "," + D.object_name(x) +
                               ") not over r(s)");
      }
    }
  }
  return Verdict::ok();
}

ArrowSet pushforward(const Cofunctor& F, ArrowSet A) {
  const int k = F.target()->num_objects();
  ArrowSet out = 0;
  for (ArrowSet r = A; r; r &= r - 1) {
    const int s = std::countr_zero(r);
    for (int x = 0; x < k; ++x) {
      if (F.defined(s, x)) out |= ArrowSet{1} << F.rho1(s, x);
    }
  }
  return out;
}

SemigroupMorphism cofunctor_to_morphism(const Cofunctor& F, const SliceSemigroup& SC,
                                        const SliceSemigroup& SD) {
  if (!same_category(SC.category, F.source()) || !same_category(SD.category, F.target())) {
    fail(ErrorKind::Input, "CompositionMismatch", "slice semigroups do not match the cofunctor");
  }
  std::vector<int> map;
  for (ArrowSet A : SC.slices) {
    const ArrowSet B = pushforward(F, A);
    auto j = SD.index_of(B);
    if (!j) {
      fail(ErrorKind::Axiom, "PushforwardNotMorphism",
           "image of " + slice_name(*SC.category, A) + " is not an element of the target");
    }
    map.push_back(*j);
  }
  SemigroupMorphism f = make_morphism(SC.algebra, SD.algebra, std::move(map));
  const auto& S = *f.source;
  const auto& T = *f.target;
  for (int a = 0; a < S.size(); ++a) {
    if (f(S.star(a)) != T.star(f(a))) {
      fail(ErrorKind::Axiom, "PushforwardNotMorphism", "star at " + S.name(a));
    }
    for (int b = 0; b < S.size(); ++b) {
      if (f(S.mul(a, b)) != T.mul(f(a), f(b))) {
        fail(ErrorKind::Axiom, "PushforwardNotMorphism", "product at " + S.name(a) + "," + S.name(b));
      }
    }
  }
  return f;
}

SemigroupMorphism cofunctor_to_morphism(const Cofunctor& F) {
  return cofunctor_to_morphism(F, slice_semigroup(F.source()), slice_semigroup(F.target()));
}

Report pushforward_report(const Cofunctor& F, const SemigroupMorphism& f) {
  Report r;
  const CofunctorFlags flags = check_cofunctor(F);
  auto implied = [&](const char* name, bool premise, auto verdict) {
    if (!premise) {
      r.info(name, "premise false");
      return;
    }
    const Verdict v = verdict();
    r.check(v.pass, name, v.witness);
  };
  implied("injective=>weakly_meet_preserving", flags.injective_on_arrows.value,
          [&] { return check_morphism(f, 2); });
  implied("surjective=>proper", flags.surjective_on_arrows.value,
          [&] { return check_morphism(f, 3); });
  implied("action_injective=>preserves_bideterministic", flags.action_injective.value,
          [&] { return preserves_bideterministic(f); });
  return r;
}

CoveringFunctor make_functor(CatPtr Dp, CatPtr Cp, std::vector<int> f0, std::vector<int> f1) {
  const FinCat& D = *Dp;
  const FinCat& C = *Cp;
  if (f0.size() != static_cast<std::size_t>(D.num_objects()) ||
      f1.size() != static_cast<std::size_t>(D.num_arrows())) {
    fail(ErrorKind::Input, "BadTableShape", "functor tables have the wrong length");
  }
  for (int o : f0) {
    if (o < 0 || o >= C.num_objects()) fail(ErrorKind::Input, "BadTableShape", "f0 out of range");
  }
  for (int a : f1) {
    if (a < 0 || a >= C.num_arrows()) fail(ErrorKind::Input, "BadTableShape", "f1 out of range");
  }
  for (int a = 0; a < D.num_arrows(); ++a) {
    if (C.dom(f1[a]) != f0[D.dom(a)] || C.cod(f1[a]) != f0[D.cod(a)]) {
      fail(ErrorKind::Axiom, "NotAFunctor", "ends of " + D.arrow_name(a));
    }
  }
  for (int o = 0; o < D.num_objects(); ++o) {
    if (f1[D.unit(o)] != C.unit(f0[o])) fail(ErrorKind::Axiom, "NotAFunctor", "unit at " + D.object_name(o));
  }
  for (int a = 0; a < D.num_arrows(); ++a) {
    for (int b = 0; b < D.num_arrows(); ++b) {
      const int ab = D.comp(a, b);
      if (ab >= 0 && f1[ab] != C.comp(f1[a], f1[b])) {
        fail(ErrorKind::Axiom, "NotAFunctor", "composite " + D.arrow_name(a) + "," + D.arrow_name(b));
      }
    }
  }
  return {std::move(Dp), std::move(Cp), std::move(f0), std::move(f1)};
}

CoveringFunctor cofunctor_to_covering(const Cofunctor& F) {
  const CofunctorFlags flags = check_cofunctor(F);
  if (!flags.bijective_on_arrows.value) {
    fail(ErrorKind::Precondition, "NotBijectiveOnArrows", flags.bijective_on_arrows.witness->rule);
  }
  const FinCat& C = *F.source();
  const FinCat& D = *F.target();
  std::vector<int> f1(D.num_arrows(), -1);
  for (int s = 0; s < C.num_arrows(); ++s) {
    for (int x = 0; x < D.num_objects(); ++x) {
      if (F.defined(s, x)) f1[F.rho1(s, x)] = s;
    }
  }
  return make_functor(F.target(), F.source(), F.tables().anchor, std::move(f1));
}

Cofunctor covering_to_cofunctor(const CoveringFunctor& g) {
  const FinCat& D = *g.source;
  const FinCat& C = *g.target;
  const int k = D.num_objects();
  CofunctorTables t;
  t.anchor = g.f0;
  t.mu.assign(static_cast<std::size_t>(C.num_arrows()) * k, -1);
  t.rho1.assign(t.mu.size(), -1);
  for (int x = 0; x < k; ++x) {
    for (int s : C.arrows_from(g.f0[x])) {
      int lift = -1;
      int count = 0;
      for (int a : D.arrows_from(x)) {
        if (g.f1[a] == s) {
          lift = a;
          ++count;
        }
      }
      if (count != 1) {
        fail(ErrorKind::Precondition, "NotStarBijective",
             "(" + D.object_name(x) + "," + C.arrow_name(s) + ") has " + std::to_string(count) +
                 " lifts");
      }
      const std::size_t i = static_cast<std::size_t>(s) * k + x;
      t.mu[i] = D.cod(lift);
      t.rho1[i] = lift;
    }
  }
  return make_cofunctor(g.target, g.source, std::move(t));
}

}  // namespace sdl
