#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdl/error.hpp"
#include "sdl/gba.hpp"
#include "sdl/report.hpp"

namespace sdl {

/// Raw tables of a finite biunary semigroup. `mult` is row-major: entry
/// `mult[i * n + j]` is the product written i·j.
struct AlgebraTables {
  std::vector<std::string> names;
  std::vector<int> mult;
  std::vector<int> star;
  std::optional<std::vector<int>> plus;
  std::optional<int> zero;
};

/// Finite semigroup with a support operation and an optional cosupport
/// operation. Immutable once built; construction verifies associativity.
///
/// The natural partial order s <= t (s = t s^*) is tabulated at construction,
/// and so is the dual order s <=' t (s = s^+ t) when a plus table is present.
class BiUnaryAlgebra {
 public:
  int size() const { return n_; }
  const std::vector<std::string>& names() const { return t_.names; }
  const std::string& name(int i) const { return t_.names.at(i); }
  std::optional<int> index_of(const std::string& name) const;

  int mul(int a, int b) const { return t_.mult[static_cast<std::size_t>(a) * n_ + b]; }
  int star(int a) const { return t_.star[a]; }
  bool has_plus() const { return t_.plus.has_value(); }
  /// Throws Error{Precondition, "NoPlusTable"} when absent.
  int plus(int a) const;
  std::optional<int> declared_zero() const { return t_.zero; }
  const AlgebraTables& tables() const { return t_; }

  bool is_projection(int a) const { return t_.star[a] == a; }
  /// Image of the star table, increasing.
  const std::vector<int>& projection_list() const { return projections_; }

  bool leq(int s, int t) const { return leq_[static_cast<std::size_t>(s) * n_ + t] != 0; }
  bool leq_plus(int s, int t) const;

  /// Copy with the plus table replaced (or removed when `plus` is empty).
  BiUnaryAlgebra with_plus(std::optional<std::vector<int>> plus) const;

  friend BiUnaryAlgebra make_algebra(AlgebraTables tables);

 private:
  BiUnaryAlgebra() = default;

  int n_ = 0;
  AlgebraTables t_;
  std::vector<int> projections_;
  std::vector<unsigned char> leq_;
  std::vector<unsigned char> leq_plus_;
  std::unordered_map<std::string, int> by_name_;
};

using AlgebraPtr = std::shared_ptr<const BiUnaryAlgebra>;

/// Validates shapes, index ranges, associativity and a declared zero.
/// Throws Error{Input, "BadTableShape"} or Error{Axiom, "NotAssociative"}.
BiUnaryAlgebra make_algebra(AlgebraTables tables);
BiUnaryAlgebra make_algebra(std::vector<std::string> names,
                            const std::vector<std::vector<int>>& mult, std::vector<int> star,
                            std::optional<std::vector<int>> plus = std::nullopt,
                            std::optional<int> zero = std::nullopt);

std::string describe(const BiUnaryAlgebra& S, const Witness& w);

// ---------------------------------------------------------------------------
// Classification

struct Flag {
  bool value = false;
  std::optional<Witness> witness;
};

struct AlgebraClassification {
  Flag ehresmann, coehresmann, biehresmann;
  Flag restriction, corestriction, birestriction, range;
  Flag has_zero_projection, has_local_units;
  Flag preboolean_restriction, boolean_restriction;
  Flag preboolean_birestriction, boolean_birestriction;
  Flag boolean_range, etale_range, groupoidal_etale;
  Flag inverse, has_binary_meets;
  /// True when no plus table was stored and the cosupport was inferred.
  bool plus_inferred = false;
  std::optional<int> zero;

  /// (name, flag) pairs in a fixed reporting order.
  std::vector<std::pair<std::string, const Flag*>> entries() const;
};

AlgebraClassification classify(const BiUnaryAlgebra& S);
/// Renders the classification as INFO lines plus PASS/FAIL lines for the
/// recorded implications between flags.
Report classification_report(const BiUnaryAlgebra& S, const AlgebraClassification& c);

// ---------------------------------------------------------------------------
// Projections and the natural partial orders

/// P(S) as the image of star. Throws Error{Axiom, "PlusStarMismatch"} when a
/// plus table is present and its image differs.
std::vector<int> projections(const BiUnaryAlgebra& S);

enum class Side { Star, Plus };
/// Throws Error{Precondition, "NoPlusTable"} for Side::Plus without a plus table.
bool nat_leq(const BiUnaryAlgebra& S, int a, int b, Side side = Side::Star);

enum class Compat { Right, Left, Bi };
bool compatible(const BiUnaryAlgebra& S, int s, int t, Compat mode = Compat::Right);

/// Least upper bound of s and t under <=, if it exists.
std::optional<int> join(const BiUnaryAlgebra& S, int s, int t);
/// Least upper bound of a set under <=; the empty set has none unless S has a minimum.
std::optional<int> join_of(const BiUnaryAlgebra& S, std::span<const int> elems);
/// Greatest lower bound of s and t under <=, if it exists.
std::optional<int> meet(const BiUnaryAlgebra& S, int s, int t);

/// The projection lattice as a finite GBA over its minimal non-zero projections,
/// when P(S) is one.
struct ProjectionLattice {
  std::optional<FinGBA> gba;
  std::vector<int> atoms;             // projection elements, increasing
  std::vector<Mask> atoms_below;      // indexed by element; 0 for non-projections
  std::vector<int> gba_index;         // element -> GBA element index, -1 otherwise
  std::vector<int> element_of;        // GBA element index -> projection element
  std::optional<Witness> failure;

  bool is_gba() const { return gba.has_value(); }
  /// Projection join, assuming is_gba().
  int join(int e, int f) const;
  int diff(int e, int f) const;
};

ProjectionLattice projection_lattice(const BiUnaryAlgebra& S);

// ---------------------------------------------------------------------------
// Deterministic elements and partial isomorphisms

struct DeterministicSets {
  std::vector<int> deterministic;
  std::vector<int> codeterministic;
  std::vector<int> bideterministic;
};

/// Codeterministic sets are empty when S has no plus table.
DeterministicSets deterministic_sets(const BiUnaryAlgebra& S);

struct Subalgebra {
  BiUnaryAlgebra algebra;
  std::vector<int> embedding;  // sub index -> parent index
};

/// The induced (2,1,1)-subalgebra on the bideterministic elements.
/// Throws Error{Precondition, "NoPlusTable"} and Error{Axiom, "NotClosed"}.
Subalgebra bd_subalgebra(const BiUnaryAlgebra& S);
/// Induced subalgebra on `elements` (must be closed under all operations).
Subalgebra induced_subalgebra(const BiUnaryAlgebra& S, std::vector<int> elements);

struct PartialIsomorphisms {
  std::vector<int> elements;
  std::vector<int> partner;  // indexed by element of S, -1 when none
  bool inverse_semigroup = false;
};

PartialIsomorphisms partial_isomorphisms(const BiUnaryAlgebra& S);

struct CosupportInference {
  std::optional<std::vector<int>> plus;
  std::optional<Witness> failure;
};

/// Computes s^+ as the least left local unit of s and validates the candidate.
/// Throws Error{Precondition, "NoLeftUnit"} when some element has no left unit.
CosupportInference infer_cosupport(const BiUnaryAlgebra& S);

/// A bijection commuting with mult and star, and with plus when both sides
/// carry one. Found by backtracking; none when no isomorphism exists.
std::optional<std::vector<int>> iso_algebras(const BiUnaryAlgebra& S, const BiUnaryAlgebra& T);

}  // namespace sdl
