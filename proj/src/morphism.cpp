#include "sdl/morphism.hpp"

#include <sstream>

namespace sdl {
namespace {

std::string pair_names(const BiUnaryAlgebra& S, std::initializer_list<int> xs) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (int x : xs) {
    if (!first) out << ',';
    out << S.name(x);
    first = false;
  }
  out << ')';
  return out.str();
}

Verdict homomorphism(const SemigroupMorphism& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      if (f(S.mul(s, t)) != T.mul(f(s), f(t))) {
        return Verdict::failed("product" + pair_names(S, {s, t}));
      }
    }
  }
  for (int s = 0; s < S.size(); ++s) {
    if (f(S.star(s)) != T.star(f(s))) return Verdict::failed("star" + pair_names(S, {s}));
  }
  if (S.has_plus() && T.has_plus()) {
    for (int s = 0; s < S.size(); ++s) {
      if (f(S.plus(s)) != T.plus(f(s))) return Verdict::failed("plus" + pair_names(S, {s}));
    }
  }
  return Verdict::ok();
}

Verdict proper_on_projections(const SemigroupMorphism& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  const ProjectionLattice PS = projection_lattice(S);
  const ProjectionLattice PT = projection_lattice(T);
  if (!PS.is_gba()) return Verdict::failed("source projections not a generalized Boolean algebra");
  if (!PT.is_gba()) return Verdict::failed("target projections not a generalized Boolean algebra");
  const int zs = PS.element_of[PS.gba->bottom()];
  const int zt = PT.element_of[PT.gba->bottom()];
  if (f(zs) != zt) return Verdict::failed("zero" + pair_names(S, {zs}));
  const auto& P = S.projection_list();
  for (int e : P) {
    for (int g : P) {
      if (f(PS.join(e, g)) != PT.join(f(e), f(g))) {
        return Verdict::failed("join" + pair_names(S, {e, g}));
      }
      if (f(PS.diff(e, g)) != PT.diff(f(e), f(g))) {
        return Verdict::failed("diff" + pair_names(S, {e, g}));
      }
    }
  }
  for (int q : T.projection_list()) {
    bool covered = false;
    for (int e : P) {
      if (T.leq(q, f(e))) {
        covered = true;
        break;
      }
    }
    if (!covered) return Verdict::failed("uncovered projection " + T.name(q));
  }
  return Verdict::ok();
}

Verdict weakly_meet_preserving(const SemigroupMorphism& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      for (int u = 0; u < T.size(); ++u) {
        if (!T.leq(u, f(s)) || !T.leq(u, f(t))) continue;
        bool found = false;
        for (int v = 0; v < S.size() && !found; ++v) {
          found = S.leq(v, s) && S.leq(v, t) && T.leq(u, f(v));
        }
        if (!found) {
          return Verdict::failed("weak meet(" + S.name(s) + "," + S.name(t) + "," + T.name(u) + ")");
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict proper(const SemigroupMorphism& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  std::vector<unsigned char> covered(T.size(), 0);
  for (int u = 0; u < T.size(); ++u) {
    for (int s = 0; s < S.size() && !covered[u]; ++s) covered[u] = T.leq(u, f(s));
  }
  for (int t = 0; t < T.size(); ++t) {
    std::vector<int> below;
    for (int u = 0; u < T.size(); ++u) {
      if (covered[u] && T.leq(u, t)) below.push_back(u);
    }
    auto j = join_of(T, below);
    if (!j || *j != t) return Verdict::failed("not proper at " + T.name(t));
  }
  return Verdict::ok();
}

}  // namespace

SemigroupMorphism make_morphism(AlgebraPtr source, AlgebraPtr target, std::vector<int> map) {
  if (!source || !target) fail(ErrorKind::Input, "BadMorphism", "missing endpoint");
  if (map.size() != static_cast<std::size_t>(source->size())) {
    fail(ErrorKind::Input, "BadMorphism", "map must have one entry per source element");
  }
  for (int v : map) {
    if (v < 0 || v >= target->size()) {
      fail(ErrorKind::Input, "BadMorphism", "map entry " + std::to_string(v) + " out of range");
    }
  }
  return {std::move(source), std::move(target), std::move(map)};
}

SemigroupMorphism identity_morphism(AlgebraPtr S) {
  std::vector<int> map(S->size());
  for (int i = 0; i < S->size(); ++i) map[i] = i;
  return {S, S, std::move(map)};
}

bool same_tables(const BiUnaryAlgebra& a, const BiUnaryAlgebra& b) {
  const auto& x = a.tables();
  const auto& y = b.tables();
  return x.mult == y.mult && x.star == y.star && x.plus == y.plus;
}

SemigroupMorphism compose(const SemigroupMorphism& g, const SemigroupMorphism& f) {
  if (f.target != g.source && !same_tables(*f.target, *g.source)) {
    fail(ErrorKind::Input, "CompositionMismatch", "target of f is not the source of g");
  }
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g.map[f.map[i]];
  return {f.source, g.target, std::move(map)};
}

Verdict check_morphism(const SemigroupMorphism& f, int type) {
  if (type < 1 || type > 4) fail(ErrorKind::Input, "BadMorphismType", std::to_string(type));
  if (auto v = homomorphism(f); !v) return v;
  if (auto v = proper_on_projections(f); !v) return v;
  if (type == 2 || type == 4) {
    if (auto v = weakly_meet_preserving(f); !v) return v;
  }
  if (type == 3 || type == 4) {
    if (auto v = proper(f); !v) return v;
  }
  return Verdict::ok();
}

Verdict preserves_bideterministic(const SemigroupMorphism& f) {
  const auto bs = deterministic_sets(*f.source).bideterministic;
  const auto bt = deterministic_sets(*f.target).bideterministic;
  std::vector<unsigned char> in_t(f.target->size(), 0);
  for (int b : bt) in_t[b] = 1;
  for (int b : bs) {
    if (!in_t[f(b)]) return Verdict::failed("bideterministic " + f.source->name(b));
  }
  return Verdict::ok();
}

}  // namespace sdl
