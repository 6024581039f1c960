#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdl/algebra.hpp"
#include "sdl/error.hpp"

namespace sdl {

/// Raw tables of a finite category. `comp` is row-major over arrows:
/// `comp[x * m + y]` is x∘y (first y, then x), or -1 when dom(x) != cod(y).
struct CategoryTables {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<int> dom;
  std::vector<int> cod;
  std::vector<int> units;
  std::vector<int> comp;
};

/// Finite small category, validated at construction and immutable afterwards.
class FinCat {
 public:
  int num_objects() const { return static_cast<int>(t_.objects.size()); }
  int num_arrows() const { return static_cast<int>(t_.arrows.size()); }
  const std::string& object_name(int o) const { return t_.objects.at(o); }
  const std::string& arrow_name(int a) const { return t_.arrows.at(a); }
  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> arrow_index(const std::string& name) const;

  int dom(int a) const { return t_.dom[a]; }
  int cod(int a) const { return t_.cod[a]; }
  int unit(int o) const { return t_.units[o]; }
  bool is_unit(int a) const { return t_.units[t_.dom[a]] == a; }
  bool composable(int x, int y) const { return t_.dom[x] == t_.cod[y]; }
  /// x∘y, or -1 when not composable.
  int comp(int x, int y) const { return t_.comp[static_cast<std::size_t>(x) * num_arrows() + y]; }

  /// Arrows with the given domain (a d-fiber), increasing.
  const std::vector<int>& arrows_from(int o) const { return from_[o]; }
  const std::vector<int>& arrows_to(int o) const { return to_[o]; }
  const CategoryTables& tables() const { return t_; }

  friend FinCat make_category(CategoryTables tables);

 private:
  FinCat() = default;

  CategoryTables t_;
  std::vector<std::vector<int>> from_;
  std::vector<std::vector<int>> to_;
  std::unordered_map<std::string, int> object_by_name_;
  std::unordered_map<std::string, int> arrow_by_name_;
};

using CatPtr = std::shared_ptr<const FinCat>;

/// Checks (DRU), (DP), (RP), (A), (UL) and that comp is defined exactly on
/// composable pairs. Throws Error{Input, "BadTableShape"},
/// Error{Axiom, "CompDomainMismatch"} or Error{Axiom, "AxiomFail"}.
FinCat make_category(CategoryTables tables);

struct GroupoidCheck {
  std::optional<std::vector<int>> inverse;  // arrow -> inverse arrow
  std::optional<int> witness;               // a non-invertible arrow
};

GroupoidCheck is_groupoid(const FinCat& C);

/// Isomorphism of categories as object and arrow bijections.
struct CategoryIso {
  std::vector<int> objects;
  std::vector<int> arrows;
};

std::optional<CategoryIso> iso_categories(const FinCat& C, const FinCat& D);

// ---------------------------------------------------------------------------
// Slices

/// Set of arrows, one bit per arrow index (categories with at most 64 arrows).
using ArrowSet = std::uint64_t;

inline constexpr int kMaxSliceArrows = 64;

bool is_local_section(const FinCat& C, ArrowSet A);
bool is_bislice(const FinCat& C, ArrowSet A);

ArrowSet slice_product(const FinCat& C, ArrowSet A, ArrowSet B);
/// 1_{d(A)}
ArrowSet slice_support(const FinCat& C, ArrowSet A);
/// 1_{r(A)}
ArrowSet slice_cosupport(const FinCat& C, ArrowSet A);
/// Units over a set of objects given as a bit mask.
ArrowSet units_over(const FinCat& C, std::uint64_t objects);
std::uint64_t dom_set(const FinCat& C, ArrowSet A);
std::uint64_t cod_set(const FinCat& C, ArrowSet A);

/// A local section together with the category it lives in.
struct Slice {
  CatPtr parent;
  ArrowSet arrows = 0;
};

/// Throws Error{Precondition, "ParentMismatch"}.
Slice slice_product(const Slice& A, const Slice& B);
Slice slice_support(const Slice& A);
Slice slice_cosupport(const Slice& A);

std::string slice_name(const FinCat& C, ArrowSet A);

/// The semigroup of local sections (or local bisections) of a category.
struct SliceSemigroup {
  CatPtr category;
  bool bislices = false;
  std::vector<ArrowSet> slices;  // element index -> arrow set
  AlgebraPtr algebra;

  std::optional<int> index_of(ArrowSet A) const;

 private:
  friend SliceSemigroup slice_semigroup(CatPtr, bool, std::optional<long>);
  std::unordered_map<ArrowSet, int> index_;
};

/// Bound on slice-semigroup size: the SDL_MAX_SIZE environment variable, or 100000.
long default_max_size();
/// Product over objects of (1 + number of arrows with that domain).
long predicted_slice_count(const FinCat& C);

/// Throws Error{Size, "TooLarge"} when the predicted count exceeds the bound.
SliceSemigroup slice_semigroup(CatPtr C, bool bislices_only = false,
                               std::optional<long> max_size = std::nullopt);

}  // namespace sdl
