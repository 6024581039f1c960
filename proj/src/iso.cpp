#include <algorithm>
#include <functional>

#include "sdl/algebra.hpp"
#include "sdl/category.hpp"

namespace sdl {
namespace {

// Partial bijection between two finite sets with an undo trail.
struct Bijection {
  std::vector<int> fwd;
  std::vector<int> bwd;
  std::vector<int> trail;

  explicit Bijection(int n) : fwd(n, -1), bwd(n, -1) {}

  // Returns false on conflict.
  bool bind(int a, int b) {
    if (fwd[a] == b) return true;
    if (fwd[a] >= 0 || bwd[b] >= 0) return false;
    fwd[a] = b;
    bwd[b] = a;
    trail.push_back(a);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      const int a = trail.back();
      trail.pop_back();
      bwd[fwd[a]] = -1;
      fwd[a] = -1;
    }
  }
};

std::vector<std::vector<int>> algebra_signatures(const BiUnaryAlgebra& S) {
  const int n = S.size();
  std::vector<std::vector<int>> sig(n);
  for (int s = 0; s < n; ++s) {
    int down = 0, up = 0, fiber = 0, left = 0, right = 0;
    for (int t = 0; t < n; ++t) {
      down += S.leq(t, s);
      up += S.leq(s, t);
      fiber += S.star(t) == s;
      left += S.mul(s, t) == s;
      right += S.mul(t, s) == s;
    }
    sig[s] = {S.is_projection(s), S.mul(s, s) == s, down, up, fiber, left, right};
    if (S.has_plus()) sig[s].push_back(S.plus(s) == s);
  }
  return sig;
}

template <class Sig>
bool same_multiset(Sig a, Sig b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::optional<std::vector<int>> iso_algebras(const BiUnaryAlgebra& S, const BiUnaryAlgebra& T) {
  const int n = S.size();
  if (T.size() != n) return std::nullopt;
  const bool with_plus = S.has_plus() && T.has_plus();
  const auto ss = algebra_signatures(S);
  const auto ts = algebra_signatures(T);
  if (!same_multiset(ss, ts)) return std::nullopt;

  Bijection f(n);
  // Binds a -> b and closes the binding under products and unary operations.
  std::function<bool(int, int)> bind = [&](int a, int b) -> bool {
    if (f.fwd[a] == b) return true;
    if (ss[a] != ts[b] || !f.bind(a, b)) return false;
    if (!bind(S.star(a), T.star(b))) return false;
    if (with_plus && !bind(S.plus(a), T.plus(b))) return false;
    for (std::size_t i = 0; i < f.trail.size(); ++i) {
      const int c = f.trail[i];
      const int d = f.fwd[c];
      if (!bind(S.mul(a, c), T.mul(b, d))) return false;
      if (!bind(S.mul(c, a), T.mul(d, b))) return false;
    }
    return true;
  };

  std::function<bool()> search = [&]() -> bool {
    int a = 0;
    while (a < n && f.fwd[a] >= 0) ++a;
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (f.bwd[b] >= 0 || ss[a] != ts[b]) continue;
      const std::size_t mark = f.trail.size();
      if (bind(a, b) && search()) return true;
      f.undo(mark);
    }
    return false;
  };
  if (!search()) return std::nullopt;
  return f.fwd;
}

std::optional<CategoryIso> iso_categories(const FinCat& C, const FinCat& D) {
  const int k = C.num_objects();
  const int m = C.num_arrows();
  if (D.num_objects() != k || D.num_arrows() != m) return std::nullopt;

  auto object_sigs = [](const FinCat& X) {
    std::vector<std::vector<int>> sig(X.num_objects());
    for (int o = 0; o < X.num_objects(); ++o) {
      int loops = 0;
      for (int a : X.arrows_from(o)) loops += X.cod(a) == o;
      sig[o] = {static_cast<int>(X.arrows_from(o).size()), static_cast<int>(X.arrows_to(o).size()),
                loops};
    }
    return sig;
  };
  const auto cos = object_sigs(C);
  const auto dos = object_sigs(D);
  auto arrow_sigs = [](const FinCat& X, const std::vector<std::vector<int>>& os) {
    std::vector<std::vector<int>> sig(X.num_arrows());
    for (int a = 0; a < X.num_arrows(); ++a) {
      int parallel = 0;
      for (int b : X.arrows_from(X.dom(a))) parallel += X.cod(b) == X.cod(a);
      sig[a] = {X.is_unit(a), X.dom(a) == X.cod(a), parallel};
      sig[a].insert(sig[a].end(), os[X.dom(a)].begin(), os[X.dom(a)].end());
      sig[a].insert(sig[a].end(), os[X.cod(a)].begin(), os[X.cod(a)].end());
    }
    return sig;
  };
  const auto cas = arrow_sigs(C, cos);
  const auto das = arrow_sigs(D, dos);
  if (!same_multiset(cos, dos) || !same_multiset(cas, das)) return std::nullopt;

  Bijection obj(k);
  Bijection arr(m);
  std::function<bool(int, int)> bind_arrow;
  auto bind_object = [&](int o, int p) -> bool {
    if (obj.fwd[o] == p) return true;
    if (cos[o] != dos[p] || !obj.bind(o, p)) return false;
    return bind_arrow(C.unit(o), D.unit(p));
  };
  bind_arrow = [&](int a, int b) -> bool {
    if (arr.fwd[a] == b) return true;
    if (cas[a] != das[b] || !arr.bind(a, b)) return false;
    if (!bind_object(C.dom(a), D.dom(b)) || !bind_object(C.cod(a), D.cod(b))) return false;
    for (std::size_t i = 0; i < arr.trail.size(); ++i) {
      const int c = arr.trail[i];
      const int d = arr.fwd[c];
      const int ac = C.comp(a, c);
      const int bd = D.comp(b, d);
      if ((ac < 0) != (bd < 0)) return false;
      if (ac >= 0 && !bind_arrow(ac, bd)) return false;
      const int ca = C.comp(c, a);
      const int db = D.comp(d, b);
      if ((ca < 0) != (db < 0)) return false;
      if (ca >= 0 && !bind_arrow(ca, db)) return false;
    }
    return true;
  };

  std::function<bool()> search = [&]() -> bool {
    int a = 0;
    while (a < m && arr.fwd[a] >= 0) ++a;
    if (a == m) return true;
    for (int b = 0; b < m; ++b) {
      if (arr.bwd[b] >= 0 || cas[a] != das[b]) continue;
      const std::size_t mark_a = arr.trail.size();
      const std::size_t mark_o = obj.trail.size();
      if (bind_arrow(a, b) && search()) return true;
      arr.undo(mark_a);
      obj.undo(mark_o);
    }
    return false;
  };
  if (!search()) return std::nullopt;
  return CategoryIso{obj.fwd, arr.fwd};
}

}  // namespace sdl
