// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "sdl/kernels.hpp"
#include "sdl/zoo.hpp"

namespace {

const sdl::BiUnaryAlgebra& pt(int n) {
  static const sdl::BiUnaryAlgebra p3 = sdl::gen_pt(3);
  static const sdl::BiUnaryAlgebra p4 = sdl::gen_pt(4);
  return n == 3 ? p3 : p4;
}

const sdl::SliceSemigroup& k3_slices() {
  static const sdl::SliceSemigroup sc =
      sdl::slice_semigroup(std::make_shared<const sdl::FinCat>(sdl::gen_pair_groupoid(3)));
  return sc;
}

template <bool Parallel>
void BM_Associativity(benchmark::State& state) {
  const auto& S = pt(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? sdl::parallel::first_associativity_failure(S.tables().mult, S.size())
                      : sdl::serial::first_associativity_failure(S.tables().mult, S.size());
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_JoinTable(benchmark::State& state) {
  const auto& S = pt(3);
  for (auto _ : state) {
    auto t = Parallel ? sdl::parallel::join_table(S) : sdl::serial::join_table(S);
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_SliceProducts(benchmark::State& state) {
  const auto& sc = k3_slices();
  for (auto _ : state) {
    auto t = Parallel ? sdl::parallel::slice_product_table(*sc.category, sc.slices)
                      : sdl::serial::slice_product_table(*sc.category, sc.slices);
    benchmark::DoNotOptimize(t.data());
  }
}

}  // namespace

BENCHMARK(BM_Associativity<false>)->Arg(3)->Arg(4);
BENCHMARK(BM_Associativity<true>)->Arg(3)->Arg(4);
BENCHMARK(BM_JoinTable<false>);
BENCHMARK(BM_JoinTable<true>);
BENCHMARK(BM_SliceProducts<false>);
BENCHMARK(BM_SliceProducts<true>);

BENCHMARK_MAIN();
