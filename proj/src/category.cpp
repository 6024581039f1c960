#include "sdl/category.hpp"

#include <bit>
#include <cstdlib>

#include "sdl/kernels.hpp"

namespace sdl {
namespace {

void check_index(int v, int n, const std::string& what) {
  if (v < 0 || v >= n) {
    fail(ErrorKind::Input, "BadTableShape", what + " entry " + std::to_string(v) + " out of range");
  }
}

[[noreturn]] void axiom_fail(const std::string& axiom, std::initializer_list<int> args,
                             const FinCat& C) {
  std::string msg = axiom + "(";
  bool first = true;
  for (int a : args) {
    if (!first) msg += ",";
    msg += C.arrow_name(a);
    first = false;
  }
  fail(ErrorKind::Axiom, "AxiomFail", msg + ")");
}

}  // namespace

std::optional<int> FinCat::object_index(const std::string& name) const {
  auto it = object_by_name_.find(name);
  if (it == object_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCat::arrow_index(const std::string& name) const {
  auto it = arrow_by_name_.find(name);
  if (it == arrow_by_name_.end()) return std::nullopt;
  return it->second;
}

FinCat make_category(CategoryTables t) {
  const int k = static_cast<int>(t.objects.size());
  const int m = static_cast<int>(t.arrows.size());
  if (k == 0) fail(ErrorKind::Input, "BadTableShape", "category without objects");
  if (t.dom.size() != static_cast<std::size_t>(m) || t.cod.size() != static_cast<std::size_t>(m)) {
    fail(ErrorKind::Input, "BadTableShape", "dom and cod need one entry per arrow");
  }
  if (t.units.size() != static_cast<std::size_t>(k)) {
    fail(ErrorKind::Input, "BadTableShape", "units need one entry per object");
  }
  if (t.comp.size() != static_cast<std::size_t>(m) * m) {
    fail(ErrorKind::Input, "BadTableShape", "comp must be arrows x arrows");
  }
  for (int i = 0; i < m; ++i) {
    check_index(t.dom[i], k, "dom");
    check_index(t.cod[i], k, "cod");
  }
  for (int u : t.units) check_index(u, m, "units");
  for (int c : t.comp) {
    if (c != -1) check_index(c, m, "comp");
  }

  FinCat C;
  for (int i = 0; i < k; ++i) {
    if (!C.object_by_name_.emplace(t.objects[i], i).second) {
      fail(ErrorKind::Input, "DuplicateName", t.objects[i]);
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!C.arrow_by_name_.emplace(t.arrows[i], i).second) {
      fail(ErrorKind::Input, "DuplicateName", t.arrows[i]);
    }
  }
  C.t_ = std::move(t);
  C.from_.assign(k, {});
  C.to_.assign(k, {});
  for (int a = 0; a < m; ++a) {
    C.from_[C.dom(a)].push_back(a);
    C.to_[C.cod(a)].push_back(a);
  }

  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (C.composable(x, y) != (C.comp(x, y) != -1)) {
        fail(ErrorKind::Axiom, "CompDomainMismatch",
             "(" + C.arrow_name(x) + "," + C.arrow_name(y) + ")");
      }
    }
  }
  for (int o = 0; o < k; ++o) {
    const int u = C.unit(o);
    if (C.dom(u) != o || C.cod(u) != o) axiom_fail("DRU", {u}, C);
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int xy = C.comp(x, y);
      if (xy < 0) continue;
      if (C.dom(xy) != C.dom(y)) axiom_fail("DP", {x, y}, C);
      if (C.cod(xy) != C.cod(x)) axiom_fail("RP", {x, y}, C);
    }
  }
  auto assoc = parallel::first_triple(m, [&](int x, int y, int z) {
    const int xy = C.comp(x, y);
    const int yz = C.comp(y, z);
    if (xy < 0 || yz < 0) return false;
    return C.comp(xy, z) != C.comp(x, yz);
  });
  if (assoc) axiom_fail("A", {(*assoc)[0], (*assoc)[1], (*assoc)[2]}, C);
  for (int x = 0; x < m; ++x) {
    if (C.comp(C.unit(C.cod(x)), x) != x || C.comp(x, C.unit(C.dom(x))) != x) {
      axiom_fail("UL", {x}, C);
    }
  }
  return C;
}

GroupoidCheck is_groupoid(const FinCat& C) {
  std::vector<int> inv(C.num_arrows(), -1);
  for (int a = 0; a < C.num_arrows(); ++a) {
    for (int b : C.arrows_from(C.cod(a))) {
      if (C.cod(b) == C.dom(a) && C.comp(a, b) == C.unit(C.cod(a)) &&
          C.comp(b, a) == C.unit(C.dom(a))) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) return {std::nullopt, a};
  }
  return {std::move(inv), std::nullopt};
}

bool is_local_section(const FinCat& C, ArrowSet A) {
  std::uint64_t seen = 0;
  for (ArrowSet rest = A; rest; rest &= rest - 1) {
    const std::uint64_t bit = std::uint64_t{1} << C.dom(std::countr_zero(rest));
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool is_bislice(const FinCat& C, ArrowSet A) {
  if (!is_local_section(C, A)) return false;
  std::uint64_t seen = 0;
  for (ArrowSet rest = A; rest; rest &= rest - 1) {
    const std::uint64_t bit = std::uint64_t{1} << C.cod(std::countr_zero(rest));
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

ArrowSet slice_product(const FinCat& C, ArrowSet A, ArrowSet B) {
  ArrowSet out = 0;
  for (ArrowSet ra = A; ra; ra &= ra - 1) {
    const int a = std::countr_zero(ra);
    for (ArrowSet rb = B; rb; rb &= rb - 1) {
      const int b = std::countr_zero(rb);
      const int ab = C.comp(a, b);
      if (ab >= 0) out |= ArrowSet{1} << ab;
    }
  }
  return out;
}

std::uint64_t dom_set(const FinCat& C, ArrowSet A) {
  std::uint64_t out = 0;
  for (ArrowSet r = A; r; r &= r - 1) out |= std::uint64_t{1} << C.dom(std::countr_zero(r));
  return out;
}

std::uint64_t cod_set(const FinCat& C, ArrowSet A) {
  std::uint64_t out = 0;
  for (ArrowSet r = A; r; r &= r - 1) out |= std::uint64_t{1} << C.cod(std::countr_zero(r));
  return out;
}

ArrowSet units_over(const FinCat& C, std::uint64_t objects) {
  ArrowSet out = 0;
  for (std::uint64_t r = objects; r; r &= r - 1) {
    out |= ArrowSet{1} << C.unit(std::countr_zero(r));
  }
  return out;
}

ArrowSet slice_support(const FinCat& C, ArrowSet A) { return units_over(C, dom_set(C, A)); }
ArrowSet slice_cosupport(const FinCat& C, ArrowSet A) { return units_over(C, cod_set(C, A)); }

Slice slice_product(const Slice& A, const Slice& B) {
  if (A.parent != B.parent) {
    fail(ErrorKind::Precondition, "ParentMismatch", "slices belong to different categories");
  }
  return {A.parent, slice_product(*A.parent, A.arrows, B.arrows)};
}

Slice slice_support(const Slice& A) { return {A.parent, slice_support(*A.parent, A.arrows)}; }
Slice slice_cosupport(const Slice& A) { return {A.parent, slice_cosupport(*A.parent, A.arrows)}; }

std::string slice_name(const FinCat& C, ArrowSet A) {
  std::string out = "{";
  for (ArrowSet r = A; r; r &= r - 1) {
    if (out.size() > 1) out += ',';
    out += C.arrow_name(std::countr_zero(r));
  }
  return out + "}";
}

std::optional<int> SliceSemigroup::index_of(ArrowSet A) const {
  auto it = index_.find(A);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long default_max_size() {
  if (const char* env = std::getenv("SDL_MAX_SIZE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    fail(ErrorKind::Input, "BadMaxSize", std::string("SDL_MAX_SIZE=") + env);
  }
  return 100000;
}

long predicted_slice_count(const FinCat& C) {
  long count = 1;
  constexpr long kCap = 1L << 40;
  for (int o = 0; o < C.num_objects(); ++o) {
    count *= 1 + static_cast<long>(C.arrows_from(o).size());
    if (count > kCap) return kCap;
  }
  return count;
}

SliceSemigroup slice_semigroup(CatPtr Cp, bool bislices_only, std::optional<long> max_size) {
  const FinCat& C = *Cp;
  const long bound = max_size ? *max_size : default_max_size();
  const long predicted = predicted_slice_count(C);
  if (predicted > bound) {
    fail(ErrorKind::Size, "TooLarge",
         "predicted " + std::to_string(predicted) + " slices, bound " + std::to_string(bound));
  }
  if (C.num_arrows() > kMaxSliceArrows || C.num_objects() > kMaxSliceArrows) {
    fail(ErrorKind::Size, "TooLarge", "slices support at most 64 arrows");
  }

  SliceSemigroup out;
  out.category = Cp;
  out.bislices = bislices_only;
  // Mixed-radix walk over d-fibers; object 0 varies fastest.
  const int k = C.num_objects();
  std::vector<int> choice(k, 0);
  while (true) {
    ArrowSet A = 0;
    for (int o = 0; o < k; ++o) {
      if (choice[o] > 0) A |= ArrowSet{1} << C.arrows_from(o)[choice[o] - 1];
    }
    if (!bislices_only || is_bislice(C, A)) out.slices.push_back(A);
    int o = 0;
    while (o < k && choice[o] == static_cast<int>(C.arrows_from(o).size())) choice[o++] = 0;
    if (o == k) break;
    ++choice[o];
  }
  const int n = static_cast<int>(out.slices.size());
  for (int i = 0; i < n; ++i) out.index_.emplace(out.slices[i], i);

  AlgebraTables t;
  for (ArrowSet A : out.slices) t.names.push_back(slice_name(C, A));
  const auto products = parallel::slice_product_table(C, out.slices);
  t.mult.resize(products.size());
  for (std::size_t i = 0; i < products.size(); ++i) t.mult[i] = out.index_.at(products[i]);
  t.plus.emplace();
  for (ArrowSet A : out.slices) {
    t.star.push_back(out.index_.at(slice_support(C, A)));
    t.plus->push_back(out.index_.at(slice_cosupport(C, A)));
  }
  t.zero = out.index_.at(0);
  out.algebra = std::make_shared<const BiUnaryAlgebra>(make_algebra(std::move(t)));
  return out;
}

}  // namespace sdl
