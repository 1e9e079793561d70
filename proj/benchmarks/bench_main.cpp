#include <benchmark/benchmark.h>

#include <random>

#include "dc/cancellation.hpp"
#include "dc/doublecrystal.hpp"
#include "dc/growth.hpp"

using namespace dc;

namespace {

template <class Tag>
Matrix<Tag> random_matrix(std::size_t n, int top, unsigned seed) {
  std::mt19937 rng(seed);
  Matrix<Tag> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<int>(rng() % (top + 1)));
  return m;
}

void BM_decompose_integral(benchmark::State& state) {
  auto m = random_matrix<integral_tag>(state.range(0), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_decompose_integral)->RangeMultiplier(2)->Range(4, 32);

void BM_decompose_binary(benchmark::State& state) {
  auto m = random_matrix<binary_tag>(state.range(0), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_decompose_binary)->RangeMultiplier(2)->Range(4, 32);

void BM_growth_integral(benchmark::State& state) {
  auto m = random_matrix<integral_tag>(state.range(0), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(growth_diagram(m, Corner::NW));
}
BENCHMARK(BM_growth_integral)->RangeMultiplier(2)->Range(4, 32);

void BM_growth_binary(benchmark::State& state) {
  auto m = random_matrix<binary_tag>(state.range(0), 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(growth_diagram(m, Corner::NE));
}
BENCHMARK(BM_growth_binary)->RangeMultiplier(2)->Range(4, 32);

void BM_alternating_sum(benchmark::State& state) {
  SkewShape a{Partition{3, 2, 1}};
  SkewShape b{Partition{4, 3}, Partition{1}};
  auto stage = static_cast<Stage>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alternating_sum(a, b, stage, Mode::integral));
  state.SetLabel(stage_name(stage));
}
BENCHMARK(BM_alternating_sum)->DenseRange(0, 3);

}  // namespace
BENCHMARK_MAIN();
