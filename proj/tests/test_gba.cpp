#include <doctest.h>

#include <bit>
#include <functional>

#include "sdl/algebra.hpp"
#include "sdl/gba.hpp"
#include "sdl/zoo.hpp"

using namespace sdl;

namespace {

FinGBA power_set(int n) {
  std::vector<std::string> ground;
  for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
  std::vector<Mask> all;
  for (Mask m = 0; m < (Mask{1} << n); ++m) all.push_back(m);
  return make_gba(ground, all);
}

FinGBA projection_gba(int n) {
  const auto L = projection_lattice(gen_pt(n));
  REQUIRE(L.is_gba());
  return *L.gba;
}

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// Brute force over all subsets of E: prime filters, ultrafilters and the
// principal filters of atoms must be the same family.
void check_filters(const FinGBA& E) {
  const int n = E.size();
  REQUIRE(n <= 16);
  auto is_filter = [&](std::uint32_t F) {
    if (F == 0) return false;
    for (int a = 0; a < n; ++a) {
      if (!(F >> a & 1U)) continue;
      for (int b = 0; b < n; ++b) {
        if (E.leq(a, b) && !(F >> b & 1U)) return false;
        if ((F >> b & 1U) && !(F >> E.meet(a, b) & 1U)) return false;
      }
    }
    return true;
  };
  auto proper = [&](std::uint32_t F) { return !(F >> E.bottom() & 1U); };
  std::vector<std::uint32_t> filters;
  for (std::uint32_t F = 1; F < (std::uint32_t{1} << n); ++F) {
    if (is_filter(F) && proper(F)) filters.push_back(F);
  }
  std::vector<std::uint32_t> prime, ultra, principal;
  for (auto F : filters) {
    bool is_prime = true;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if ((F >> E.join(a, b) & 1U) && !(F >> a & 1U) && !(F >> b & 1U)) is_prime = false;
      }
    }
    if (is_prime) prime.push_back(F);
    bool maximal = true;
    for (auto G : filters) {
      if (G != F && (G & F) == F) maximal = false;
    }
    if (maximal) ultra.push_back(F);
  }
  for (int atom : E.atom_elements()) {
    std::uint32_t F = 0;
    for (int e = 0; e < n; ++e) {
      if (E.leq(atom, e)) F |= std::uint32_t{1} << e;
    }
    principal.push_back(F);
  }
  std::sort(prime.begin(), prime.end());
  std::sort(ultra.begin(), ultra.end());
  std::sort(principal.begin(), principal.end());
  CHECK(prime == ultra);
  CHECK(ultra == principal);
}

}  // namespace

TEST_CASE("make_gba accepts closed families and rejects others") {
  const FinGBA E = power_set(2);
  CHECK(E.size() == 4);
  CHECK(E.atom_elements().size() == 2);

  try {
    make_gba({"1", "2"}, {0b00, 0b01, 0b11});
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == "NotClosed");
    CHECK(std::string(e.what()).find("diff({1,2}, {1})") != std::string::npos);
  }
  CHECK(error_code([] { make_gba({"1", "2"}, {0b01, 0b10, 0b11}); }) == "MissingBottom");
  CHECK(error_code([] { make_gba({"1"}, {}); }) == "MissingBottom");
}

TEST_CASE("projection lattices of PT_n are power sets") {
  for (int n = 1; n <= 3; ++n) {
    const FinGBA E = projection_gba(n);
    CHECK(E.size() == (1 << n));
    CHECK(atoms(E).size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("atoms and characters") {
  CHECK(atoms(power_set(2)).size() == 2);
  CHECK(atoms(power_set(1)).size() == 1);  // the two-element algebra
  const FinGBA E = power_set(2);
  const auto full = *E.index_of(0b11);
  const auto single2 = *E.index_of(0b10);
  // atom index 0 is {1}
  const PrimeCharacter phi1{0};
  const PrimeCharacter phi2{1};
  CHECK(E.mask(E.atom_elements()[0]) == 0b01);
  CHECK(char_eval(E, phi1, full));
  CHECK_FALSE(char_eval(E, phi1, E.bottom()));
  CHECK_FALSE(char_eval(E, phi2, *E.index_of(0b01)));
  CHECK(char_eval(E, phi2, single2));
  CHECK(error_code([&] { char_eval(E, phi1, 99); }) == "UnknownElement");
}

TEST_CASE("Stone duality holds on finite instances") {
  for (int n = 1; n <= 4; ++n) CHECK(verify_stone_duality(power_set(n)).ok());
  for (int n = 1; n <= 3; ++n) {
    const Report r = verify_stone_duality(projection_gba(n));
    CHECK(r.ok());
    REQUIRE(r.find("characters") != nullptr);
    CHECK(r.find("characters")->detail == std::to_string(n));
  }
  // A proper sub-algebra of a power set: atoms {1,2} and {3}.
  const FinGBA coarse = make_gba({"1", "2", "3"}, {0b000, 0b011, 0b100, 0b111});
  CHECK(coarse.atom_elements().size() == 2);
  CHECK(verify_stone_duality(coarse).ok());
}

TEST_CASE("D_e preserves joins and meets for every pair") {
  const FinGBA E = power_set(3);
  for (int a = 0; a < E.size(); ++a) {
    for (int b = 0; b < E.size(); ++b) {
      CHECK(E.basic_open(E.join(a, b)) == (E.basic_open(a) | E.basic_open(b)));
      CHECK(E.basic_open(E.meet(a, b)) == (E.basic_open(a) & E.basic_open(b)));
      if (a != b) CHECK(E.basic_open(a) != E.basic_open(b));
    }
  }
}

TEST_CASE("prime filters are the principal filters of atoms") {
  for (int n = 1; n <= 4; ++n) check_filters(power_set(n));
  for (int n = 1; n <= 3; ++n) check_filters(projection_gba(n));
  check_filters(make_gba({"1", "2", "3"}, {0b000, 0b011, 0b100, 0b111}));
}
