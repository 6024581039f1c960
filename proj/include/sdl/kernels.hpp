#pragma once

// Exhaustive search kernels. Each kernel has a serial reference in
// sdl::serial and an OpenMP version in sdl::parallel; both return the
// lexicographically first counterexample so results are reproducible.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sdl {

class BiUnaryAlgebra;
class FinCat;

namespace serial {

template <class Fails>
std::optional<std::array<int, 2>> first_pair(int n, Fails&& fails) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (fails(i, j)) return std::array<int, 2>{i, j};
    }
  }
  return std::nullopt;
}

template <class Fails>
std::optional<std::array<int, 3>> first_triple(int n, Fails&& fails) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (fails(i, j, k)) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> first_associativity_failure(std::span<const int> mult, int n);
std::vector<int> join_table(const BiUnaryAlgebra& S);
std::vector<std::uint64_t> slice_product_table(const FinCat& C,
                                               std::span<const std::uint64_t> slices);

}  // namespace serial

namespace parallel {

template <class Fails>
std::optional<std::array<int, 2>> first_pair(int n, Fails&& fails) {
  int best = n;
  std::array<int, 2> witness{};
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    int current;
#pragma omp atomic read
    current = best;
    if (i > current) continue;
    for (int j = 0; j < n; ++j) {
      if (fails(i, j)) {
#pragma omp critical(sdl_first_pair)
        if (i < best) {
          best = i;
          witness = {i, j};
        }
        break;
      }
    }
  }
  if (best == n) return std::nullopt;
  return witness;
}

template <class Fails>
std::optional<std::array<int, 3>> first_triple(int n, Fails&& fails) {
  int best = n;
  std::array<int, 3> witness{};
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    int current;
#pragma omp atomic read
    current = best;
    if (i > current) continue;
    bool found = false;
    for (int j = 0; j < n && !found; ++j) {
      for (int k = 0; k < n; ++k) {
        if (fails(i, j, k)) {
#pragma omp critical(sdl_first_triple)
          if (i < best) {
            best = i;
            witness = {i, j, k};
          }
          found = true;
          break;
        }
      }
    }
  }
  if (best == n) return std::nullopt;
  return witness;
}

std::optional<std::array<int, 3>> first_associativity_failure(std::span<const int> mult, int n);
/// join(s, t) for all pairs, row-major, -1 where no join exists.
std::vector<int> join_table(const BiUnaryAlgebra& S);
/// Pairwise slice products, row-major.
std::vector<std::uint64_t> slice_product_table(const FinCat& C,
                                               std::span<const std::uint64_t> slices);

}  // namespace parallel
}  // namespace sdl
