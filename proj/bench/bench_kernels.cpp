// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "nary/dimension_formulas.hpp"
#include "nary/oracles.hpp"
#include "nary/solution_counting.hpp"

namespace {

// Zero-weight targets for (n, d, k): every T_s = kd/n.
nary::OmegaTargets zero_targets(int n, int d, std::int64_t k) {
  return {k, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), k * d / n)};
}

void BM_CountSolutions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto t = zero_targets(n, d, state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(nary::count_solutions(n, d, t));
}

void BM_CountSolutionsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto t = zero_targets(n, d, state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(nary::count_solutions_serial(n, d, t));
}

void BM_BruteCharacter(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nary::brute_character(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                                                   state.range(2)));
}

void BM_BruteCharacterSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nary::brute_character_serial(static_cast<int>(state.range(0)),
                                                          static_cast<int>(state.range(1)), state.range(2)));
}

void BM_HilbertPrefix(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nary::hilbert_prefix(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                                                  state.range(2)));
}

}  // namespace

BENCHMARK(BM_CountSolutions)->Args({3, 3, 24})->Args({4, 3, 16})->Args({3, 4, 18})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSolutionsSerial)->Args({3, 3, 24})->Args({4, 3, 16})->Args({3, 4, 18})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteCharacter)->Args({3, 3, 8})->Args({4, 2, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteCharacterSerial)->Args({3, 3, 8})->Args({4, 2, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertPrefix)->Args({3, 3, 16})->Args({4, 2, 12})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
