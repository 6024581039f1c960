#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdl/report.hpp"

namespace sdl {

/// Subset of a finite ground set, one bit per member (at most 64 members).
using Mask = std::uint64_t;

inline constexpr int kMaxAtoms = 64;

/// A prime character of a finite generalized Boolean algebra.
///
/// In the finite case every prime character is evaluation at an atom: it sends
/// `e` to 1 exactly when the atom lies below `e`.
struct PrimeCharacter {
  int atom;  // index into FinGBA::atom_elements()

  friend bool operator==(const PrimeCharacter&, const PrimeCharacter&) = default;
};

/// Finite generalized Boolean algebra stored extensionally as subsets of a
/// declared ground list. Closure under union, intersection and relative
/// complement is validated at construction and never completed silently.
class FinGBA {
 public:
  /// Throws Error{Input, "MissingBottom"} or Error{Axiom, "NotClosed"}.
  static FinGBA make(std::vector<std::string> ground, std::vector<Mask> subsets);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& ground() const { return ground_; }
  Mask mask(int e) const { return elements_.at(e); }
  std::optional<int> index_of(Mask m) const;

  int bottom() const { return bottom_; }
  int join(int a, int b) const { return lookup(elements_[a] | elements_[b]); }
  int meet(int a, int b) const { return lookup(elements_[a] & elements_[b]); }
  int diff(int a, int b) const { return lookup(elements_[a] & ~elements_[b]); }
  bool leq(int a, int b) const { return (elements_[a] & ~elements_[b]) == 0; }

  /// Minimal non-zero elements, in increasing index order.
  const std::vector<int>& atom_elements() const { return atoms_; }
  /// The set D_e of characters taking value 1 on `e`, as a mask over atoms().
  Mask basic_open(int e) const { return opens_.at(e); }

 private:
  int lookup(Mask m) const { return index_.at(m); }

  std::vector<std::string> ground_;
  std::vector<Mask> elements_;
  std::unordered_map<Mask, int> index_;
  std::vector<int> atoms_;
  std::vector<Mask> opens_;
  int bottom_ = 0;
};

FinGBA make_gba(std::vector<std::string> ground, std::vector<Mask> subsets);

/// One character per atom of `E`, in atom order.
std::vector<PrimeCharacter> atoms(const FinGBA& E);

/// Value of the character at element `e`. Throws Error{Input, "UnknownElement"}.
bool char_eval(const FinGBA& E, PrimeCharacter phi, int e);

/// Checks that e -> D_e is a lattice isomorphism onto the compact-open sets of
/// the (finite, discrete) character space and that the counit is the identity
/// on points.
Report verify_stone_duality(const FinGBA& E);

}  // namespace sdl
