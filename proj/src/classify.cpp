#include <algorithm>

#include "axioms.hpp"
#include "sdl/algebra.hpp"
#include "sdl/kernels.hpp"

namespace sdl {

namespace axioms {
namespace {

std::optional<Witness> unary(const BiUnaryAlgebra& S, const char* rule, auto fails) {
  for (int x = 0; x < S.size(); ++x) {
    if (fails(x)) return Witness{rule, {x}};
  }
  return std::nullopt;
}

std::optional<Witness> binary(const BiUnaryAlgebra& S, const char* rule, auto fails) {
  if (auto w = parallel::first_pair(S.size(), fails)) return Witness{rule, {(*w)[0], (*w)[1]}};
  return std::nullopt;
}

}  // namespace

std::optional<Witness> ehresmann(const BiUnaryAlgebra& S) {
  auto st = [&](int x) { return S.star(x); };
  if (auto w = unary(S, "xx*=x", [&](int x) { return S.mul(x, st(x)) != x; })) return w;
  if (auto w = binary(S, "x*y*=y*x*", [&](int x, int y) {
        return S.mul(st(x), st(y)) != S.mul(st(y), st(x));
      })) {
    return w;
  }
  if (auto w = binary(S, "x*y*=(x*y*)*", [&](int x, int y) {
        const int p = S.mul(st(x), st(y));
        return p != st(p);
      })) {
    return w;
  }
  return binary(S, "(xy)*=(x*y)*", [&](int x, int y) {
    return st(S.mul(x, y)) != st(S.mul(st(x), y));
  });
}

std::optional<Witness> coehresmann(const BiUnaryAlgebra& S) {
  auto pl = [&](int x) { return S.plus(x); };
  if (auto w = unary(S, "x+x=x", [&](int x) { return S.mul(pl(x), x) != x; })) return w;
  if (auto w = binary(S, "x+y+=y+x+", [&](int x, int y) {
        return S.mul(pl(x), pl(y)) != S.mul(pl(y), pl(x));
      })) {
    return w;
  }
  if (auto w = binary(S, "x+y+=(x+y+)+", [&](int x, int y) {
        const int p = S.mul(pl(x), pl(y));
        return p != pl(p);
      })) {
    return w;
  }
  return binary(S, "(xy)+=(xy+)+", [&](int x, int y) {
    return pl(S.mul(x, y)) != pl(S.mul(x, pl(y)));
  });
}

std::optional<Witness> linking(const BiUnaryAlgebra& S) {
  if (auto w = unary(S, "(x+)*=x+", [&](int x) { return S.star(S.plus(x)) != S.plus(x); })) return w;
  return unary(S, "(x*)+=x*", [&](int x) { return S.plus(S.star(x)) != S.star(x); });
}

std::optional<Witness> restriction_law(const BiUnaryAlgebra& S) {
  return binary(S, "x*y=y(xy)*", [&](int x, int y) {
    return S.mul(S.star(x), y) != S.mul(y, S.star(S.mul(x, y)));
  });
}

std::optional<Witness> corestriction_law(const BiUnaryAlgebra& S) {
  return binary(S, "xy+=(xy)+x", [&](int x, int y) {
    return S.mul(x, S.plus(y)) != S.mul(S.plus(S.mul(x, y)), x);
  });
}

}  // namespace axioms

namespace {

Flag yes() { return {true, std::nullopt}; }
Flag no(Witness w) { return {false, std::move(w)}; }
Flag from(const std::optional<Witness>& w) { return w ? no(*w) : yes(); }

// Conjunction of flags in order; the first false one supplies the witness.
Flag all_of(std::initializer_list<const Flag*> flags) {
  for (const Flag* f : flags) {
    if (!f->value) return *f;
  }
  return yes();
}

std::optional<int> zero_projection(const BiUnaryAlgebra& S) {
  auto is_left_zero_projection = [&](int z) {
    if (!S.is_projection(z)) return false;
    for (int s = 0; s < S.size(); ++s) {
      if (S.mul(z, s) != z) return false;
    }
    return true;
  };
  if (auto z = S.declared_zero(); z && is_left_zero_projection(*z)) return z;
  for (int z : S.projection_list()) {
    if (is_left_zero_projection(z)) return z;
  }
  return std::nullopt;
}

// Every s equals the join of its lower bounds drawn from `pool`.
Flag joins_of_lower_bounds(const BiUnaryAlgebra& S, const std::vector<int>& pool,
                           const char* rule) {
  for (int s = 0; s < S.size(); ++s) {
    std::vector<int> below;
    for (int u : pool) {
      if (S.leq(u, s)) below.push_back(u);
    }
    auto j = join_of(S, below);
    if (!j || *j != s) return no({rule, {s}});
  }
  return yes();
}

}  // namespace

std::vector<std::pair<std::string, const Flag*>> AlgebraClassification::entries() const {
  return {{"ehresmann", &ehresmann},
          {"coehresmann", &coehresmann},
          {"biehresmann", &biehresmann},
          {"restriction", &restriction},
          {"corestriction", &corestriction},
          {"birestriction", &birestriction},
          {"range", &range},
          {"has_zero_projection", &has_zero_projection},
          {"has_local_units", &has_local_units},
          {"preboolean_restriction", &preboolean_restriction},
          {"boolean_restriction", &boolean_restriction},
          {"preboolean_birestriction", &preboolean_birestriction},
          {"boolean_birestriction", &boolean_birestriction},
          {"boolean_range", &boolean_range},
          {"etale_range", &etale_range},
          {"groupoidal_etale", &groupoidal_etale},
          {"inverse", &inverse},
          {"has_binary_meets", &has_binary_meets}};
}

AlgebraClassification classify(const BiUnaryAlgebra& input) {
  AlgebraClassification c;
  const int n = input.size();

  c.ehresmann = from(axioms::ehresmann(input));

  std::optional<BiUnaryAlgebra> inferred;
  if (!input.has_plus() && c.ehresmann.value) {
    try {
      auto inf = infer_cosupport(input);
      if (inf.plus) {
        inferred = input.with_plus(inf.plus);
        c.plus_inferred = true;
      }
    } catch (const Error&) {
      // No left local units: there is no cosupport to infer.
    }
  }
  const BiUnaryAlgebra& S = inferred ? *inferred : input;

  if (S.has_plus()) {
    c.coehresmann = from(axioms::coehresmann(S));
  } else {
    c.coehresmann = no({"NoPlusTable", {}});
  }
  const Flag link = S.has_plus() ? from(axioms::linking(S)) : no({"NoPlusTable", {}});
  const Flag restriction_law = from(axioms::restriction_law(S));
  const Flag corestriction_law =
      S.has_plus() ? from(axioms::corestriction_law(S)) : no({"NoPlusTable", {}});

  c.biehresmann = all_of({&c.ehresmann, &c.coehresmann, &link});
  c.restriction = all_of({&c.ehresmann, &restriction_law});
  c.corestriction = all_of({&c.coehresmann, &corestriction_law});
  c.birestriction = all_of({&c.restriction, &c.corestriction, &link});
  c.range = all_of({&c.biehresmann, &c.restriction});

  c.zero = zero_projection(S);
  c.has_zero_projection = c.zero ? yes() : no({"MissingZeroProjection", {}});

  c.has_local_units = yes();
  for (int s = 0; s < n && c.has_local_units.value; ++s) {
    bool found = false;
    for (int e : S.projection_list()) found = found || S.mul(e, s) == s;
    if (!found) c.has_local_units = no({"NoLocalUnit", {s}});
  }

  const ProjectionLattice lattice = projection_lattice(S);
  Flag br2 = yes();
  if (!lattice.is_gba()) br2 = no(*lattice.failure);

  const std::vector<int> joins = parallel::join_table(S);
  auto J = [&](int s, int t) { return joins[static_cast<std::size_t>(s) * n + t]; };
  std::vector<unsigned char> bounded(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      for (int u = 0; u < n; ++u) {
        if (S.leq(s, u) && S.leq(t, u)) {
          bounded[static_cast<std::size_t>(s) * n + t] = 1;
          break;
        }
      }
    }
  }

  const Flag br1 = from([&]() -> std::optional<Witness> {
    if (auto w = parallel::first_pair(n, [&](int s, int t) {
          return J(s, t) < 0 && compatible(S, s, t, Compat::Right);
        })) {
      return Witness{"BR1: compatible without join", {(*w)[0], (*w)[1]}};
    }
    return std::nullopt;
  }());
  const Flag br1_bounded = from([&]() -> std::optional<Witness> {
    if (auto w = parallel::first_pair(n, [&](int s, int t) {
          return J(s, t) < 0 && bounded[static_cast<std::size_t>(s) * n + t];
        })) {
      return Witness{"BR1': bounded without join", {(*w)[0], (*w)[1]}};
    }
    return std::nullopt;
  }());
  const Flag br3 = from([&]() -> std::optional<Witness> {
    if (auto w = parallel::first_triple(n, [&](int s, int t, int u) {
          const int st = J(s, t);
          if (st < 0) return false;
          return J(S.mul(s, u), S.mul(t, u)) != S.mul(st, u);
        })) {
      return Witness{"BR3: (s+t)u != su+tu", {(*w)[0], (*w)[1], (*w)[2]}};
    }
    return std::nullopt;
  }());
  const Flag bbr1 = [&]() -> Flag {
    if (!S.has_plus()) return no({"NoPlusTable", {}});
    if (auto w = parallel::first_pair(n, [&](int s, int t) {
          return J(s, t) < 0 && compatible(S, s, t, Compat::Bi);
        })) {
      return no({"BBR1: bicompatible without join", {(*w)[0], (*w)[1]}});
    }
    return yes();
  }();

  c.preboolean_restriction =
      all_of({&c.restriction, &c.has_zero_projection, &br2, &br1_bounded, &br3});
  c.boolean_restriction = all_of({&c.restriction, &c.has_zero_projection, &br2, &br1, &br3});
  c.preboolean_birestriction =
      all_of({&c.birestriction, &c.has_zero_projection, &br2, &br1_bounded, &br3});
  c.boolean_birestriction = all_of({&c.birestriction, &c.has_zero_projection, &br2, &bbr1});
  c.boolean_range = all_of({&c.range, &c.boolean_restriction});

  if (c.boolean_range.value) {
    const Flag bd_joins =
        joins_of_lower_bounds(S, deterministic_sets(S).bideterministic, "NotJoinOfBideterministic");
    c.etale_range = all_of({&c.boolean_range, &bd_joins});
  } else {
    c.etale_range = c.boolean_range;
  }
  const PartialIsomorphisms pi = partial_isomorphisms(S);
  if (c.etale_range.value) {
    const Flag pi_joins = joins_of_lower_bounds(S, pi.elements, "NotJoinOfPartialIsomorphisms");
    c.groupoidal_etale = all_of({&c.etale_range, &pi_joins});
  } else {
    c.groupoidal_etale = c.etale_range;
  }

  c.inverse = yes();
  for (int a = 0; a < n && c.inverse.value; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b) {
      if (S.mul(S.mul(a, b), a) == a && S.mul(S.mul(b, a), b) == b) ++count;
    }
    if (count != 1) c.inverse = no({"NoUniqueInverse", {a}});
  }

  c.has_binary_meets = yes();
  if (auto w = parallel::first_pair(n, [&](int s, int t) { return !meet(S, s, t); })) {
    c.has_binary_meets = no({"NoMeet", {(*w)[0], (*w)[1]}});
  }
  return c;
}

Report classification_report(const BiUnaryAlgebra& S, const AlgebraClassification& c) {
  Report r;
  for (const auto& [name, flag] : c.entries()) {
    std::string value = flag->value ? "true" : "false";
    if (!flag->value && flag->witness) value += " witness=" + describe(S, *flag->witness);
    r.info(name, value);
  }
  if (c.plus_inferred) r.info("plus_inferred", "true");
  auto implies = [&](const std::string& name, bool a, bool b) { r.check(!a || b, name, "violated"); };
  implies("restriction=>ehresmann", c.restriction.value, c.ehresmann.value);
  implies("birestriction=>biehresmann", c.birestriction.value, c.biehresmann.value);
  implies("boolean_restriction=>preboolean_restriction", c.boolean_restriction.value,
          c.preboolean_restriction.value);
  implies("boolean_birestriction=>preboolean_birestriction", c.boolean_birestriction.value,
          c.preboolean_birestriction.value);
  implies("etale_range=>boolean_range", c.etale_range.value, c.boolean_range.value);
  implies("boolean_range=>range", c.boolean_range.value, c.range.value);
  implies("range=>restriction&biehresmann", c.range.value,
          c.restriction.value && c.biehresmann.value);
  return r;
}

}  // namespace sdl
