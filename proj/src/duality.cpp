#include "sdl/duality.hpp"

#include <bit>
#include <sstream>

namespace sdl {
namespace {

std::string table_str(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

// Smallest projection e with e·x = x.
int least_left_unit(const BiUnaryAlgebra& S, int x) {
  int m = -1;
  for (int e : S.projection_list()) {
    if (S.mul(e, x) == x) m = m < 0 ? e : S.mul(m, e);
  }
  return m;
}

Counit counit_from(CatPtr C, SliceSemigroup SC, GermCategory G) {
  const FinCat& c = *C;
  const int k = c.num_objects();
  CofunctorTables t;
  for (int x = 0; x < k; ++x) {
    const auto atom = SC.index_of(ArrowSet{1} << c.unit(x));
    t.anchor.push_back(G.object_of.at(*atom));
  }
  const FinCat& g = *G.category;
  t.mu.assign(static_cast<std::size_t>(g.num_arrows()) * k, -1);
  t.rho1.assign(t.mu.size(), -1);
  for (int s = 0; s < g.num_arrows(); ++s) {
    // A germ arrow is a singleton slice {a}.
    const ArrowSet A = SC.slices[G.arrow_element[s]];
    const int a = std::countr_zero(A);
    const std::size_t i = static_cast<std::size_t>(s) * k + c.dom(a);
    t.mu[i] = c.cod(a);
    t.rho1[i] = a;
  }
  Cofunctor eps = make_cofunctor(G.category, C, std::move(t));
  return {std::move(C), std::move(SC), std::move(G), std::move(eps)};
}

// S(ε_C) ∘ η_{S(C)} = id on the slice semigroup of C.
void triangle_morphism(Report& r, const Counit& E, std::optional<long> max_size) {
  UnitEta U = unit_eta(E.germs, max_size);
  const SemigroupMorphism pushed = cofunctor_to_morphism(E.epsilon, U.slices, E.slices);
  const SemigroupMorphism composite = compose(pushed, U.eta);
  const int n = E.slices.algebra->size();
  int bad = -1;
  for (int i = 0; i < n && bad < 0; ++i) {
    if (composite(i) != i) bad = i;
  }
  r.check(bad < 0, "triangle_morphism",
          bad < 0 ? "" : E.slices.algebra->name(bad) + " -> " + E.slices.algebra->name(composite(bad)));
}

// ε_{C(S)} ∘ C(η_S) = id on the germ category of S.
void triangle_cofunctor(Report& r, const UnitEta& U, const Counit& E) {
  const Cofunctor lifted = morphism_to_cofunctor(U.eta, U.germs, E.germs);
  const Cofunctor composite = compose_cofunctors(E.epsilon, lifted);
  const Cofunctor id = identity_cofunctor(U.germs.category);
  r.check(same_cofunctor(composite, id), "triangle_cofunctor",
          "anchor=" + table_str(composite.tables().anchor) +
              " rho1=" + table_str(composite.tables().rho1));
}

Verdict injective(const SemigroupMorphism& f) {
  std::vector<int> seen(f.target->size(), -1);
  for (int s = 0; s < f.source->size(); ++s) {
    if (seen[f(s)] >= 0) {
      return Verdict::failed("(" + f.source->name(seen[f(s)]) + "," + f.source->name(s) + ")");
    }
    seen[f(s)] = s;
  }
  return Verdict::ok();
}

bool surjective(const SemigroupMorphism& f) {
  std::vector<unsigned char> hit(f.target->size(), 0);
  for (int v : f.map) hit[v] = 1;
  for (unsigned char h : hit) {
    if (!h) return false;
  }
  return true;
}

void eta_checks(Report& r, const UnitEta& U, bool boolean) {
  const Verdict hom = check_morphism(U.eta, 1);
  r.check(hom.pass, "eta_morphism", hom.witness);
  const Verdict inj = injective(U.eta);
  r.check(inj.pass, "eta_injective", inj.witness);
  const bool iso = inj.pass && surjective(U.eta);
  r.info("eta_iso", iso ? "true" : "false");
  r.check(iso == boolean, "eta_iso_iff_boolean",
          std::string("iso=") + (iso ? "true" : "false") + " boolean=" + (boolean ? "true" : "false"));
  r.info("eta_table", table_str(U.eta.map));
}

void epsilon_checks(Report& r, const Counit& E) {
  r.pass("epsilon_cofunctor");
  const Verdict iso = is_isomorphism(E.epsilon);
  r.check(iso.pass, "epsilon_iso", iso.witness);
  r.info("epsilon_anchor", table_str(E.epsilon.tables().anchor));
}

}  // namespace

GermCategory germ_category(AlgebraPtr Sp) {
  const BiUnaryAlgebra& S = *Sp;
  const AlgebraClassification c = classify(S);
  if (!c.preboolean_restriction.value) {
    fail(ErrorKind::Precondition, "NotPreBoolean", describe(S, *c.preboolean_restriction.witness));
  }
  if (!c.has_local_units.value) {
    fail(ErrorKind::Precondition, "NoLocalUnits", describe(S, *c.has_local_units.witness));
  }
  const ProjectionLattice L = projection_lattice(S);
  const int n = S.size();

  GermCategory G;
  G.base = Sp;
  G.atoms = L.atoms;
  G.object_of.assign(n, -1);
  G.germ_index.assign(n, -1);
  for (std::size_t i = 0; i < G.atoms.size(); ++i) G.object_of[G.atoms[i]] = static_cast<int>(i);
  for (int x = 0; x < n; ++x) {
    if (G.object_of[S.star(x)] >= 0) {
      G.germ_index[x] = static_cast<int>(G.arrow_element.size());
      G.arrow_element.push_back(x);
    }
  }

  CategoryTables t;
  for (int a : G.atoms) t.objects.push_back(S.name(a));
  const bool range = c.range.value && S.has_plus();
  for (int x : G.arrow_element) {
    t.arrows.push_back(S.name(x));
    t.dom.push_back(G.object_of[S.star(x)]);
    const int b = least_left_unit(S, x);
    if (b < 0 || G.object_of[b] < 0) {
      fail(ErrorKind::Axiom, "GermRangeNotAtom", S.name(x));
    }
    if (range && S.plus(x) != b) fail(ErrorKind::Axiom, "GermRangeNotPlus", S.name(x));
    t.cod.push_back(G.object_of[b]);
  }
  for (int a : G.atoms) t.units.push_back(G.germ_index[a]);
  const int m = static_cast<int>(G.arrow_element.size());
  t.comp.assign(static_cast<std::size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (t.dom[i] != t.cod[j]) continue;
      const int x = G.arrow_element[i];
      const int y = G.arrow_element[j];
      const int z = S.mul(S.mul(x, y), S.star(y));
      if (G.germ_index[z] < 0) fail(ErrorKind::Axiom, "GermProductNotGerm", S.name(x) + "," + S.name(y));
      t.comp[static_cast<std::size_t>(i) * m + j] = G.germ_index[z];
    }
  }
  G.category = std::make_shared<const FinCat>(make_category(std::move(t)));
  return G;
}

ArrowSet theta(const GermCategory& G, int s) {
  const BiUnaryAlgebra& S = *G.base;
  if (s < 0 || s >= S.size()) fail(ErrorKind::Input, "UnknownElement", std::to_string(s));
  if (G.arrow_element.size() > static_cast<std::size_t>(kMaxSliceArrows)) {
    fail(ErrorKind::Size, "TooLarge", "germ category has more than 64 arrows");
  }
  ArrowSet out = 0;
  const int e = S.star(s);
  for (int a : G.atoms) {
    if (S.mul(a, e) == a) out |= ArrowSet{1} << G.germ_index[S.mul(s, a)];
  }
  return out;
}

UnitEta unit_eta(AlgebraPtr S, std::optional<long> max_size) {
  return unit_eta(germ_category(std::move(S)), max_size);
}

UnitEta unit_eta(GermCategory G, std::optional<long> max_size) {
  SliceSemigroup SC = slice_semigroup(G.category, false, max_size);
  std::vector<int> map;
  for (int s = 0; s < G.base->size(); ++s) {
    const ArrowSet A = theta(G, s);
    auto i = SC.index_of(A);
    if (!i) fail(ErrorKind::Axiom, "ThetaNotSlice", G.base->name(s));
    map.push_back(*i);
  }
  SemigroupMorphism eta = make_morphism(G.base, SC.algebra, std::move(map));
  return {std::move(G), std::move(SC), std::move(eta)};
}

Counit counit_epsilon(CatPtr C, std::optional<long> max_size) {
  SliceSemigroup SC = slice_semigroup(C, false, max_size);
  GermCategory G = germ_category(SC.algebra);
  return counit_from(std::move(C), std::move(SC), std::move(G));
}

Cofunctor morphism_to_cofunctor(const SemigroupMorphism& f, const GermCategory& GS,
                                const GermCategory& GT) {
  if (const Verdict v = check_morphism(f, 1); !v) {
    fail(ErrorKind::Precondition, "NotAMorphism", v.witness);
  }
  const BiUnaryAlgebra& S = *f.source;
  const BiUnaryAlgebra& T = *f.target;
  const FinCat& CS = *GS.category;
  const int k = static_cast<int>(GT.atoms.size());
  CofunctorTables t;
  for (int b : GT.atoms) {
    // The character ψ f restricted to P(S) is evaluation at the least e with b <= f(e).
    int a = -1;
    for (int e : S.projection_list()) {
      if (T.mul(b, f(e)) == b) a = a < 0 ? e : S.mul(a, e);
    }
    if (a < 0 || GS.object_of[a] < 0) fail(ErrorKind::Precondition, "NotAMorphism", "anchor at " + T.name(b));
    t.anchor.push_back(GS.object_of[a]);
  }
  t.mu.assign(static_cast<std::size_t>(CS.num_arrows()) * k, -1);
  t.rho1.assign(t.mu.size(), -1);
  for (int s = 0; s < CS.num_arrows(); ++s) {
    const int x = GS.arrow_element[s];
    for (int o = 0; o < k; ++o) {
      if (t.anchor[o] != CS.dom(s)) continue;
      const int germ = GT.germ_index[T.mul(f(x), GT.atoms[o])];
      if (germ < 0) fail(ErrorKind::Axiom, "GermImageNotGerm", S.name(x));
      const std::size_t i = static_cast<std::size_t>(s) * k + o;
      t.rho1[i] = germ;
      t.mu[i] = GT.category->cod(germ);
    }
  }
  return make_cofunctor(GS.category, GT.category, std::move(t));
}

Cofunctor morphism_to_cofunctor(const SemigroupMorphism& f) {
  return morphism_to_cofunctor(f, germ_category(f.source), germ_category(f.target));
}

Report verify_adjunction(AlgebraPtr S, std::optional<long> max_size) {
  Report r;
  const bool boolean = classify(*S).boolean_restriction.value;
  const UnitEta U = unit_eta(S, max_size);
  eta_checks(r, U, boolean);
  const Counit E = counit_from(U.germs.category, U.slices, germ_category(U.slices.algebra));
  epsilon_checks(r, E);
  triangle_cofunctor(r, U, E);
  triangle_morphism(r, E, max_size);
  return r;
}

Report verify_adjunction(CatPtr C, std::optional<long> max_size) {
  Report r;
  const Counit E = counit_epsilon(C, max_size);
  const UnitEta U = unit_eta(E.germs, max_size);
  eta_checks(r, U, true);
  epsilon_checks(r, E);
  triangle_morphism(r, E, max_size);
  // The other triangle at the slice semigroup of C.
  const Counit E2 = counit_from(E.germs.category, U.slices, germ_category(U.slices.algebra));
  triangle_cofunctor(r, U, E2);
  return r;
}

Report verify_birestriction_equivalence(AlgebraPtr Sp, std::optional<long> max_size) {
  const BiUnaryAlgebra& S = *Sp;
  const AlgebraClassification c = classify(S);
  if (!c.boolean_birestriction.value) {
    fail(ErrorKind::Precondition, "NotBooleanBirestriction",
         describe(S, *c.boolean_birestriction.witness));
  }
  Report r;
  const UnitEta U = unit_eta(Sp, max_size);
  const Subalgebra BD = bd_subalgebra(*U.slices.algebra);
  std::vector<int> pos(U.slices.algebra->size(), -1);
  for (std::size_t i = 0; i < BD.embedding.size(); ++i) pos[BD.embedding[i]] = static_cast<int>(i);
  std::vector<int> map;
  int outside = -1;
  for (int s = 0; s < S.size(); ++s) {
    const int p = pos[U.eta(s)];
    if (p < 0 && outside < 0) outside = s;
    map.push_back(p < 0 ? 0 : p);
  }
  r.check(outside < 0, "eta_into_bideterministic", outside < 0 ? "" : S.name(outside));
  if (outside >= 0) return r;
  const auto target = std::make_shared<const BiUnaryAlgebra>(BD.algebra);
  const SemigroupMorphism f = make_morphism(Sp, target, map);
  bool bijective = S.size() == target->size();
  std::vector<unsigned char> hit(target->size(), 0);
  for (int v : map) {
    bijective = bijective && !hit[v];
    hit[v] = 1;
  }
  r.check(bijective, "bijective", "sizes " + std::to_string(S.size()) + "/" + std::to_string(target->size()));
  std::string broken;
  for (int a = 0; a < S.size() && broken.empty(); ++a) {
    if (f(S.star(a)) != target->star(f(a))) broken = "star " + S.name(a);
    if (S.has_plus() && f(S.plus(a)) != target->plus(f(a))) broken = "plus " + S.name(a);
    for (int b = 0; b < S.size() && broken.empty(); ++b) {
      if (f(S.mul(a, b)) != target->mul(f(a), f(b))) broken = "product " + S.name(a) + "," + S.name(b);
    }
  }
  r.check(broken.empty(), "preserves_operations", broken);
  r.info("iso_table", table_str(map));
  return r;
}

Report verify_groupoidal(AlgebraPtr Sp, std::optional<long> max_size) {
  (void)max_size;
  Report r;
  const BiUnaryAlgebra& S = *Sp;
  const AlgebraClassification c = classify(S);
  const GermCategory G = germ_category(Sp);
  const bool groupoid = is_groupoid(*G.category).inverse.has_value();
  r.info("germ_groupoid", groupoid ? "true" : "false");
  if (c.boolean_restriction.value) {
    r.info("groupoidal_etale", c.groupoidal_etale.value ? "true" : "false");
    r.check(c.groupoidal_etale.value == groupoid, "groupoidal_criterion", "flags disagree");
  } else if (c.boolean_birestriction.value) {
    r.info("inverse", c.inverse.value ? "true" : "false");
    r.check(c.inverse.value == groupoid, "groupoidal_criterion", "flags disagree");
  } else {
    r.info("groupoidal_criterion", "skipped");
  }
  return r;
}

Report verify_groupoidal(CatPtr C, std::optional<long> max_size) {
  Report r;
  const bool groupoid = is_groupoid(*C).inverse.has_value();
  const SliceSemigroup SC = slice_semigroup(C, false, max_size);
  const BiUnaryAlgebra& S = *SC.algebra;
  std::vector<int> bislices;
  for (int i = 0; i < S.size(); ++i) {
    if (is_bislice(*C, SC.slices[i])) bislices.push_back(i);
  }
  const auto bd = deterministic_sets(S).bideterministic;
  const auto pi = partial_isomorphisms(S).elements;
  const bool algebraic = bd == pi && pi == bislices;
  r.info("groupoid", groupoid ? "true" : "false");
  r.info("bd=partial_isos=bislices", algebraic ? "true" : "false");
  r.check(groupoid == algebraic, "groupoidal_criterion", "flags disagree");
  r.check(classify(S).groupoidal_etale.value == groupoid, "groupoidal_etale_flag", "flags disagree");
  return r;
}

}  // namespace sdl
