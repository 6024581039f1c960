#include "sdl/gba.hpp"

#include <bit>
#include <sstream>

#include "sdl/error.hpp"

namespace sdl {
namespace {

std::string mask_str(const FinGBA& E, Mask m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < static_cast<int>(E.ground().size()); ++i) {
    if (m >> i & 1U) {
      if (!first) out << ',';
      out << E.ground()[i];
      first = false;
    }
  }
  out << '}';
  return out.str();
}

}  // namespace

FinGBA FinGBA::make(std::vector<std::string> ground, std::vector<Mask> subsets) {
  if (ground.size() > static_cast<std::size_t>(kMaxAtoms)) {
    fail(ErrorKind::Size, "TooLarge", "at most 64 ground atoms are supported");
  }
  if (subsets.empty()) fail(ErrorKind::Input, "MissingBottom", "no elements given");
  const Mask universe =
      ground.size() == 64 ? ~Mask{0} : (Mask{1} << ground.size()) - 1;

  FinGBA E;
  E.ground_ = std::move(ground);
  for (Mask m : subsets) {
    if ((m & ~universe) != 0) {
      fail(ErrorKind::Input, "BadSubset", "subset refers to an undeclared atom");
    }
    if (E.index_.contains(m)) {
      fail(ErrorKind::Input, "DuplicateElement", "subset listed twice");
    }
    E.index_.emplace(m, static_cast<int>(E.elements_.size()));
    E.elements_.push_back(m);
  }
  auto bottom = E.index_of(0);
  if (!bottom) fail(ErrorKind::Input, "MissingBottom", "the empty subset is absent");
  E.bottom_ = *bottom;

  const int n = E.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Mask x = E.elements_[a];
      const Mask y = E.elements_[b];
      const std::pair<char, Mask> results[] = {{'|', x | y}, {'&', x & y}, {'\\', x & ~y}};
      for (const auto& [op, m] : results) {
        if (!E.index_.contains(m)) {
          std::string name = op == '|' ? "join" : op == '&' ? "meet" : "diff";
          fail(ErrorKind::Axiom, "NotClosed",
               name + "(" + mask_str(E, x) + ", " + mask_str(E, y) + ")");
        }
      }
    }
  }

  for (int e = 0; e < n; ++e) {
    const Mask m = E.elements_[e];
    if (m == 0) continue;
    bool minimal = true;
    for (int f = 0; f < n && minimal; ++f) {
      const Mask k = E.elements_[f];
      if (k != 0 && k != m && (k & ~m) == 0) minimal = false;
    }
    if (minimal) E.atoms_.push_back(e);
  }
  E.opens_.resize(n, 0);
  for (int e = 0; e < n; ++e) {
    for (std::size_t i = 0; i < E.atoms_.size(); ++i) {
      if (E.leq(E.atoms_[i], e)) E.opens_[e] |= Mask{1} << i;
    }
  }
  return E;
}

std::optional<int> FinGBA::index_of(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FinGBA make_gba(std::vector<std::string> ground, std::vector<Mask> subsets) {
  return FinGBA::make(std::move(ground), std::move(subsets));
}

std::vector<PrimeCharacter> atoms(const FinGBA& E) {
  std::vector<PrimeCharacter> out;
  for (int i = 0; i < static_cast<int>(E.atom_elements().size()); ++i) out.push_back({i});
  return out;
}

bool char_eval(const FinGBA& E, PrimeCharacter phi, int e) {
  if (e < 0 || e >= E.size()) fail(ErrorKind::Input, "UnknownElement", std::to_string(e));
  if (phi.atom < 0 || phi.atom >= static_cast<int>(E.atom_elements().size())) {
    fail(ErrorKind::Input, "UnknownCharacter", std::to_string(phi.atom));
  }
  return E.leq(E.atom_elements()[phi.atom], e);
}

Report verify_stone_duality(const FinGBA& E) {
  Report report;
  const int n = E.size();
  const auto chars = atoms(E);
  const int k = static_cast<int>(chars.size());
  report.info("characters", std::to_string(k));

  // D_e agrees with pointwise evaluation.
  std::string witness;
  for (int e = 0; e < n && witness.empty(); ++e) {
    for (const auto& phi : chars) {
      const bool in_open = (E.basic_open(e) >> phi.atom & 1U) != 0;
      if (in_open != char_eval(E, phi, e)) {
        witness = "element " + std::to_string(e) + " atom " + std::to_string(phi.atom);
        break;
      }
    }
  }
  report.check(witness.empty(), "eta_matches_evaluation", witness);

  // Every character kills the bottom and is non-zero.
  witness.clear();
  for (const auto& phi : chars) {
    bool nonzero = false;
    for (int e = 0; e < n; ++e) nonzero = nonzero || char_eval(E, phi, e);
    if (char_eval(E, phi, E.bottom()) || !nonzero) witness = "atom " + std::to_string(phi.atom);
  }
  report.check(witness.empty(), "characters_proper", witness);

  // eta is a bijection onto all subsets of the (discrete) character space.
  witness.clear();
  std::vector<int> preimage(std::size_t{1} << k, -1);
  if (k > 20) {
    witness = "character space too large to enumerate";
  }
  for (int e = 0; e < n && witness.empty(); ++e) {
    const Mask open = E.basic_open(e);
    if (preimage[open] != -1) {
      witness = "D_" + std::to_string(preimage[open]) + " = D_" + std::to_string(e);
    }
    preimage[open] = e;
  }
  report.check(witness.empty(), "eta_injective", witness);
  witness.clear();
  if (k <= 20) {
    for (std::size_t m = 0; m < preimage.size(); ++m) {
      if (preimage[m] == -1) {
        witness = "compact-open " + std::to_string(m) + " not of the form D_e";
        break;
      }
    }
  }
  report.check(witness.empty() && k <= 20, "eta_surjective", witness);

  // Lattice homomorphism.
  witness.clear();
  for (int a = 0; a < n && witness.empty(); ++a) {
    for (int b = 0; b < n; ++b) {
      if (E.basic_open(E.join(a, b)) != (E.basic_open(a) | E.basic_open(b)) ||
          E.basic_open(E.meet(a, b)) != (E.basic_open(a) & E.basic_open(b)) ||
          E.basic_open(E.diff(a, b)) != (E.basic_open(a) & ~E.basic_open(b))) {
        witness = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        break;
      }
    }
  }
  report.check(witness.empty(), "eta_lattice_morphism", witness);

  // Counit: the point character phi_x of the compact-open algebra evaluates
  // to 1 exactly on the opens containing x, and its unique minimal open is {x}.
  witness.clear();
  for (int x = 0; x < k && witness.empty(); ++x) {
    Mask minimal = ~Mask{0};
    for (int e = 0; e < n; ++e) {
      const Mask open = E.basic_open(e);
      if (open >> x & 1U) minimal &= open;
    }
    if (minimal != Mask{1} << x) witness = "point " + std::to_string(x);
  }
  report.check(witness.empty(), "epsilon_identity_on_points", witness);
  return report;
}

}  // namespace sdl
