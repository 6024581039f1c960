#include "sdl/kernels.hpp"

#include "sdl/algebra.hpp"
#include "sdl/category.hpp"

namespace sdl {
namespace {

int product(std::span<const int> mult, int n, int a, int b) {
  return mult[static_cast<std::size_t>(a) * n + b];
}

bool associativity_fails(std::span<const int> mult, int n, int a, int b, int c) {
  return product(mult, n, product(mult, n, a, b), c) != product(mult, n, a, product(mult, n, b, c));
}

int join_entry(const BiUnaryAlgebra& S, int s, int t) {
  auto j = join(S, s, t);
  return j ? *j : -1;
}

}  // namespace

namespace serial {

std::optional<std::array<int, 3>> first_associativity_failure(std::span<const int> mult, int n) {
  return first_triple(n, [&](int a, int b, int c) { return associativity_fails(mult, n, a, b, c); });
}

std::vector<int> join_table(const BiUnaryAlgebra& S) {
  const int n = S.size();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) out[static_cast<std::size_t>(s) * n + t] = join_entry(S, s, t);
  }
  return out;
}

std::vector<std::uint64_t> slice_product_table(const FinCat& C,
                                               std::span<const std::uint64_t> slices) {
  const std::size_t m = slices.size();
  std::vector<std::uint64_t> out(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] = slice_product(C, slices[i], slices[j]);
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::optional<std::array<int, 3>> first_associativity_failure(std::span<const int> mult, int n) {
  return first_triple(n, [&](int a, int b, int c) { return associativity_fails(mult, n, a, b, c); });
}

std::vector<int> join_table(const BiUnaryAlgebra& S) {
  const int n = S.size();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) out[static_cast<std::size_t>(s) * n + t] = join_entry(S, s, t);
  }
  return out;
}

std::vector<std::uint64_t> slice_product_table(const FinCat& C,
                                               std::span<const std::uint64_t> slices) {
  const long m = static_cast<long>(slices.size());
  std::vector<std::uint64_t> out(static_cast<std::size_t>(m * m));
#pragma omp parallel for schedule(static)
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) out[i * m + j] = slice_product(C, slices[i], slices[j]);
  }
  return out;
}

}  // namespace parallel
}  // namespace sdl
