#pragma once

#include <optional>
#include <vector>

#include "sdl/algebra.hpp"
#include "sdl/category.hpp"
#include "sdl/morphism.hpp"
#include "sdl/report.hpp"

namespace sdl {

/// Tables of a cofunctor C ⇝ D. `mu` and `rho1` are row-major over
/// (arrow s of C, object x of D) and hold -1 exactly when d(s) != anchor[x].
struct CofunctorTables {
  std::vector<int> anchor;  // D_0 -> C_0
  std::vector<int> mu;      // s·x, an object of D
  std::vector<int> rho1;    // an arrow of D from x to s·x
};

/// A cofunctor: an action of C on D_0 along the anchor map, together with a
/// functor from the transformation category to D that is the identity on objects.
class Cofunctor {
 public:
  const CatPtr& source() const { return c_; }
  const CatPtr& target() const { return d_; }
  int anchor(int x) const { return t_.anchor[x]; }
  bool defined(int s, int x) const { return c_->dom(s) == t_.anchor[x]; }
  int mu(int s, int x) const { return t_.mu[idx(s, x)]; }
  int rho1(int s, int x) const { return t_.rho1[idx(s, x)]; }
  const CofunctorTables& tables() const { return t_; }

  friend Cofunctor make_cofunctor(CatPtr C, CatPtr D, CofunctorTables tables);

 private:
  std::size_t idx(int s, int x) const {
    return static_cast<std::size_t>(s) * d_->num_objects() + x;
  }

  CatPtr c_;
  CatPtr d_;
  CofunctorTables t_;
};

/// Validates every action and functoriality law. Throws Error{Input,
/// "BadTableShape"} or Error{Axiom, "CofunctorAxiom"} with the failing law.
Cofunctor make_cofunctor(CatPtr C, CatPtr D, CofunctorTables tables);
Cofunctor identity_cofunctor(CatPtr C);
/// G after F, for F: C ⇝ D and G: D ⇝ E. Throws Error{Input, "CompositionMismatch"}.
Cofunctor compose_cofunctors(const Cofunctor& G, const Cofunctor& F);
/// Same categories (by identity) and identical tables.
bool same_cofunctor(const Cofunctor& F, const Cofunctor& G);

struct CofunctorFlags {
  Flag injective_on_arrows;   // witness: s, t, x, y with equal images
  Flag surjective_on_arrows;  // witness: an arrow of D outside the image
  Flag bijective_on_arrows;
  Flag action_injective;      // witness: s, x, y with s·x = s·y
};

CofunctorFlags check_cofunctor(const Cofunctor& F);

/// Bijective anchor, bijective ρ1, and μ(s,x) the unique object over r(s).
Verdict is_isomorphism(const Cofunctor& F);

/// F_*(A) = {ρ1(s,x) : s ∈ A, d(s) = f(x)}.
ArrowSet pushforward(const Cofunctor& F, ArrowSet A);

/// A ↦ F_*(A) between the given slice semigroups.
/// Throws Error{Axiom, "PushforwardNotMorphism"} if the map is not a (2,1)-morphism.
SemigroupMorphism cofunctor_to_morphism(const Cofunctor& F, const SliceSemigroup& SC,
                                        const SliceSemigroup& SD);
SemigroupMorphism cofunctor_to_morphism(const Cofunctor& F);

/// Checks that the cofunctor flags imply the matching morphism properties:
/// injective on arrows => weakly meet-preserving, surjective => proper,
/// injective action => bideterministic elements preserved.
Report pushforward_report(const Cofunctor& F, const SemigroupMorphism& f);

/// A functor g: D -> C given by object and arrow tables.
struct CoveringFunctor {
  CatPtr source;  // D
  CatPtr target;  // C
  std::vector<int> f0;
  std::vector<int> f1;
};

/// Validates functoriality. Throws Error{Axiom, "NotAFunctor"}.
CoveringFunctor make_functor(CatPtr D, CatPtr C, std::vector<int> f0, std::vector<int> f1);
/// Throws Error{Precondition, "NotBijectiveOnArrows"}.
CoveringFunctor cofunctor_to_covering(const Cofunctor& F);
/// Throws Error{Precondition, "NotStarBijective"} with the first failing (object, arrow).
Cofunctor covering_to_cofunctor(const CoveringFunctor& g);

}  // namespace sdl
