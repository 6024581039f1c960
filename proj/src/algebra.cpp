#include "sdl/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "axioms.hpp"
#include "sdl/kernels.hpp"

namespace sdl {
namespace {

void check_index(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    fail(ErrorKind::Input, "BadTableShape",
         std::string(what) + " entry " + std::to_string(v) + " out of range");
  }
}

}  // namespace

int BiUnaryAlgebra::plus(int a) const {
  if (!t_.plus) fail(ErrorKind::Precondition, "NoPlusTable", "algebra has no plus table");
  return (*t_.plus)[a];
}

bool BiUnaryAlgebra::leq_plus(int s, int t) const {
  if (!t_.plus) fail(ErrorKind::Precondition, "NoPlusTable", "algebra has no plus table");
  return leq_plus_[static_cast<std::size_t>(s) * n_ + t] != 0;
}

std::optional<int> BiUnaryAlgebra::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

BiUnaryAlgebra BiUnaryAlgebra::with_plus(std::optional<std::vector<int>> plus) const {
  AlgebraTables t = t_;
  t.plus = std::move(plus);
  return make_algebra(std::move(t));
}

BiUnaryAlgebra make_algebra(AlgebraTables t) {
  const int n = static_cast<int>(t.names.size());
  if (n == 0) fail(ErrorKind::Input, "BadTableShape", "empty algebra");
  if (t.mult.size() != static_cast<std::size_t>(n) * n) {
    fail(ErrorKind::Input, "BadTableShape", "mult must be n x n");
  }
  if (t.star.size() != static_cast<std::size_t>(n)) {
    fail(ErrorKind::Input, "BadTableShape", "star must have n entries");
  }
  if (t.plus && t.plus->size() != static_cast<std::size_t>(n)) {
    fail(ErrorKind::Input, "BadTableShape", "plus must have n entries");
  }
  for (int v : t.mult) check_index(v, n, "mult");
  for (int v : t.star) check_index(v, n, "star");
  if (t.plus) {
    for (int v : *t.plus) check_index(v, n, "plus");
  }
  if (t.zero) check_index(*t.zero, n, "zero");

  BiUnaryAlgebra S;
  S.n_ = n;
  for (int i = 0; i < n; ++i) {
    if (!S.by_name_.emplace(t.names[i], i).second) {
      fail(ErrorKind::Input, "DuplicateName", t.names[i]);
    }
  }
  if (auto w = parallel::first_associativity_failure(t.mult, n)) {
    const auto& [a, b, c] = *w;
    fail(ErrorKind::Axiom, "NotAssociative",
         "(" + t.names[a] + "," + t.names[b] + "," + t.names[c] + ")");
  }
  S.t_ = std::move(t);
  if (S.t_.zero) {
    const int z = *S.t_.zero;
    for (int s = 0; s < n; ++s) {
      if (S.mul(z, s) != z || S.mul(s, z) != z) {
        fail(ErrorKind::Axiom, "BadZero", "declared zero does not absorb " + S.t_.names[s]);
      }
    }
    if (S.star(z) != z) fail(ErrorKind::Axiom, "BadZero", "declared zero is not fixed by star");
  }

  std::vector<int> image(S.t_.star);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  S.projections_ = std::move(image);

  S.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int u = 0; u < n; ++u) {
      S.leq_[static_cast<std::size_t>(s) * n + u] = S.mul(u, S.star(s)) == s;
    }
  }
  if (S.t_.plus) {
    S.leq_plus_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
      for (int u = 0; u < n; ++u) {
        S.leq_plus_[static_cast<std::size_t>(s) * n + u] = S.mul((*S.t_.plus)[s], u) == s;
      }
    }
  }
  return S;
}

BiUnaryAlgebra make_algebra(std::vector<std::string> names,
                            const std::vector<std::vector<int>>& mult, std::vector<int> star,
                            std::optional<std::vector<int>> plus, std::optional<int> zero) {
  AlgebraTables t;
  const std::size_t n = names.size();
  if (mult.size() != n) fail(ErrorKind::Input, "BadTableShape", "mult must have n rows");
  for (const auto& row : mult) {
    if (row.size() != n) fail(ErrorKind::Input, "BadTableShape", "mult rows must have n entries");
    t.mult.insert(t.mult.end(), row.begin(), row.end());
  }
  t.names = std::move(names);
  t.star = std::move(star);
  t.plus = std::move(plus);
  t.zero = zero;
  return make_algebra(std::move(t));
}

std::string describe(const BiUnaryAlgebra& S, const Witness& w) {
  std::ostringstream out;
  out << w.rule;
  if (!w.args.empty()) {
    out << '(';
    for (std::size_t i = 0; i < w.args.size(); ++i) {
      if (i) out << ',';
      const int a = w.args[i];
      out << (a >= 0 && a < S.size() ? S.name(a) : std::to_string(a));
    }
    out << ')';
  }
  return out.str();
}

std::vector<int> projections(const BiUnaryAlgebra& S) {
  std::vector<int> p = S.projection_list();
  if (S.has_plus()) {
    std::vector<int> q(S.tables().plus->begin(), S.tables().plus->end());
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (p != q) fail(ErrorKind::Axiom, "PlusStarMismatch", "images of star and plus differ");
  }
  return p;
}

bool nat_leq(const BiUnaryAlgebra& S, int a, int b, Side side) {
  return side == Side::Star ? S.leq(a, b) : S.leq_plus(a, b);
}

bool compatible(const BiUnaryAlgebra& S, int s, int t, Compat mode) {
  const bool right = S.mul(s, S.star(t)) == S.mul(t, S.star(s));
  if (mode == Compat::Right) return right;
  const bool left = S.mul(S.plus(t), s) == S.mul(S.plus(s), t);
  return mode == Compat::Left ? left : (left && right);
}

std::optional<int> join_of(const BiUnaryAlgebra& S, std::span<const int> elems) {
  const int n = S.size();
  std::vector<int> upper;
  for (int u = 0; u < n; ++u) {
    bool bound = true;
    for (int s : elems) {
      if (!S.leq(s, u)) {
        bound = false;
        break;
      }
    }
    if (bound) upper.push_back(u);
  }
  for (int u : upper) {
    bool least = true;
    for (int v : upper) {
      if (!S.leq(u, v)) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<int> join(const BiUnaryAlgebra& S, int s, int t) {
  const int pair[] = {s, t};
  return join_of(S, pair);
}

std::optional<int> meet(const BiUnaryAlgebra& S, int s, int t) {
  const int n = S.size();
  std::vector<int> lower;
  for (int u = 0; u < n; ++u) {
    if (S.leq(u, s) && S.leq(u, t)) lower.push_back(u);
  }
  for (int u : lower) {
    bool greatest = true;
    for (int v : lower) {
      if (!S.leq(v, u)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return u;
  }
  return std::nullopt;
}

int ProjectionLattice::join(int e, int f) const {
  return element_of.at(gba->join(gba_index.at(e), gba_index.at(f)));
}

int ProjectionLattice::diff(int e, int f) const {
  return element_of.at(gba->diff(gba_index.at(e), gba_index.at(f)));
}

ProjectionLattice projection_lattice(const BiUnaryAlgebra& S) {
  ProjectionLattice L;
  const int n = S.size();
  const auto& P = S.projection_list();
  L.atoms_below.assign(n, 0);
  L.gba_index.assign(n, -1);

  std::optional<int> bottom;
  for (int b : P) {
    bool below_all = true;
    for (int e : P) below_all = below_all && S.mul(b, e) == b;
    if (below_all) {
      bottom = b;
      break;
    }
  }
  if (!bottom) {
    L.failure = Witness{"NoBottomProjection", {}};
    return L;
  }
  // e <= f on projections iff e = e f.
  for (int a : P) {
    if (a == *bottom) continue;
    bool minimal = true;
    for (int c : P) {
      if (c != *bottom && c != a && S.mul(c, a) == c) {
        minimal = false;
        break;
      }
    }
    if (minimal) L.atoms.push_back(a);
  }
  if (L.atoms.size() > static_cast<std::size_t>(kMaxAtoms)) {
    L.failure = Witness{"TooManyAtoms", {}};
    return L;
  }
  std::vector<std::string> ground;
  for (int a : L.atoms) ground.push_back(S.name(a));
  for (int e : P) {
    Mask m = 0;
    for (std::size_t i = 0; i < L.atoms.size(); ++i) {
      if (S.mul(L.atoms[i], e) == L.atoms[i]) m |= Mask{1} << i;
    }
    L.atoms_below[e] = m;
  }
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      const int e = P[i];
      const int f = P[j];
      if (i < j && L.atoms_below[e] == L.atoms_below[f]) {
        L.failure = Witness{"NotAtomic", {e, f}};
        return L;
      }
      if (L.atoms_below[S.mul(e, f)] != (L.atoms_below[e] & L.atoms_below[f])) {
        L.failure = Witness{"MeetNotIntersection", {e, f}};
        return L;
      }
    }
  }
  std::vector<Mask> subsets;
  for (int e : P) subsets.push_back(L.atoms_below[e]);
  try {
    L.gba = make_gba(std::move(ground), subsets);
  } catch (const Error& err) {
    L.failure = Witness{"NotGeneralizedBoolean: " + std::string(err.what()), {}};
    return L;
  }
  L.element_of.assign(L.gba->size(), -1);
  for (int e : P) {
    const int g = *L.gba->index_of(L.atoms_below[e]);
    L.gba_index[e] = g;
    L.element_of[g] = e;
  }
  return L;
}

DeterministicSets deterministic_sets(const BiUnaryAlgebra& S) {
  DeterministicSets out;
  const auto& P = S.projection_list();
  for (int a = 0; a < S.size(); ++a) {
    bool det = true;
    for (int e : P) {
      const int ea = S.mul(e, a);
      if (ea != S.mul(a, S.star(ea))) {
        det = false;
        break;
      }
    }
    bool codet = S.has_plus();
    if (codet) {
      for (int e : P) {
        const int ae = S.mul(a, e);
        if (ae != S.mul(S.plus(ae), a)) {
          codet = false;
          break;
        }
      }
    }
    if (det) out.deterministic.push_back(a);
    if (codet) out.codeterministic.push_back(a);
    if (det && codet) out.bideterministic.push_back(a);
  }
  return out;
}

Subalgebra induced_subalgebra(const BiUnaryAlgebra& S, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> pos(S.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elements.size());

  auto inside = [&](int v, const char* what, int a, int b) {
    if (pos[v] < 0) {
      std::string msg = std::string(what) + " of " + S.name(a);
      if (b >= 0) msg += "," + S.name(b);
      fail(ErrorKind::Axiom, "NotClosed", msg);
    }
    return pos[v];
  };

  AlgebraTables t;
  for (int e : elements) t.names.push_back(S.name(e));
  t.mult.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t.mult[static_cast<std::size_t>(i) * m + j] =
          inside(S.mul(elements[i], elements[j]), "product", elements[i], elements[j]);
    }
    t.star.push_back(inside(S.star(elements[i]), "star", elements[i], -1));
  }
  if (S.has_plus()) {
    t.plus.emplace();
    for (int i = 0; i < m; ++i) {
      t.plus->push_back(inside(S.plus(elements[i]), "plus", elements[i], -1));
    }
  }
  if (S.declared_zero() && pos[*S.declared_zero()] >= 0) t.zero = pos[*S.declared_zero()];
  return {make_algebra(std::move(t)), std::move(elements)};
}

Subalgebra bd_subalgebra(const BiUnaryAlgebra& S) {
  if (!S.has_plus()) fail(ErrorKind::Precondition, "NoPlusTable", "bd_subalgebra needs plus");
  return induced_subalgebra(S, deterministic_sets(S).bideterministic);
}

PartialIsomorphisms partial_isomorphisms(const BiUnaryAlgebra& S) {
  PartialIsomorphisms out;
  const int n = S.size();
  out.partner.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (S.mul(s, t) == S.star(t) && S.mul(t, s) == S.star(s)) {
        out.partner[s] = t;
        out.elements.push_back(s);
        break;
      }
    }
  }
  // Closed under products, regular, with commuting idempotents.
  bool inverse = true;
  for (int s : out.elements) {
    const int sp = out.partner[s];
    if (S.mul(S.mul(s, sp), s) != s) inverse = false;
    for (int t : out.elements) {
      if (out.partner[S.mul(s, t)] < 0) inverse = false;
    }
  }
  std::vector<int> idempotents;
  for (int s : out.elements) {
    if (S.mul(s, s) == s) idempotents.push_back(s);
  }
  for (int e : idempotents) {
    for (int f : idempotents) {
      if (S.mul(e, f) != S.mul(f, e)) inverse = false;
    }
  }
  out.inverse_semigroup = inverse;
  return out;
}

CosupportInference infer_cosupport(const BiUnaryAlgebra& S) {
  const int n = S.size();
  const auto& P = S.projection_list();
  std::vector<int> plus(n);
  for (int s = 0; s < n; ++s) {
    std::optional<int> m;
    for (int f : P) {
      if (S.mul(f, s) == s) m = m ? S.mul(*m, f) : f;
    }
    if (!m) fail(ErrorKind::Precondition, "NoLeftUnit", S.name(s));
    if (S.mul(*m, s) != s) return {std::nullopt, Witness{"LeftUnitsNotMeetClosed", {s}}};
    plus[s] = *m;
  }
  const BiUnaryAlgebra candidate = S.with_plus(plus);
  if (auto w = axioms::coehresmann(candidate)) return {std::nullopt, w};
  if (auto w = axioms::linking(candidate)) return {std::nullopt, w};
  return {std::move(plus), std::nullopt};
}

}  // namespace sdl
