#include <benchmark/benchmark.h>

#include <random>

#include "dwcat/classification.hpp"

using namespace dwcat;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-9, 9);
  IntMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = e(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_ThirdCohomology(benchmark::State& state) {
  auto D = make_dihedral_odd(static_cast<int>(state.range(0)));
  const std::int64_t M = static_cast<std::int64_t>(D->order()) * D->order();
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_group(D, 3, M));
}
BENCHMARK(BM_ThirdCohomology)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Identities(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto cat = make_category(make_dihedral_odd(m), dihedral_omega_p(m, 1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cocycle_identities(*cat));
}
BENCHMARK(BM_Identities)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto cat = make_category(make_dihedral_odd(m), dihedral_omega_p(m, 0));
  ClassifyOptions opt;
  opt.verify = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(cat, opt));
}
BENCHMARK(BM_Classify)->Args({1, 0})->Args({1, 1})->Args({2, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
