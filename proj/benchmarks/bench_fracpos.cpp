#include <benchmark/benchmark.h>

#include "fracpos/admissibility.hpp"
#include "fracpos/cones.hpp"
#include "fracpos/random.hpp"
#include "fracpos/thresholds.hpp"

using namespace fracpos;

static void BM_LambdaDepolarizing(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto w = choi_depolarizing(d, 0.9);
  const auto level = FractionalLevel::make(d - 0.5, d);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_numeric(w, level).value);
}
BENCHMARK(BM_LambdaDepolarizing)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_LambdaRandom(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const HermitianOperator w(BipartiteDims::square(d), random_hermitian(d * d, rng));
  const auto level = FractionalLevel::make(1.5, d);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_numeric(w, level).value);
}
BENCHMARK(BM_LambdaRandom)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_AdmissibleVector(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const auto psi = random_unit_vector(BipartiteDims::square(d), rng);
  const auto level = FractionalLevel::make(1.5, d);
  for (auto _ : state) benchmark::DoNotOptimize(is_admissible_vector(psi, level).admissible);
}
BENCHMARK(BM_AdmissibleVector)->RangeMultiplier(2)->Range(2, 16);

static void BM_Inversions(benchmark::State& state) {
  double f = 0.2, t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fsn_isotropic(f, 5));
    benchmark::DoNotOptimize(tau_depolarizing(t, 5));
    f = f < 0.99 ? f + 0.001 : 0.2;
    t = t < 0.99 ? t + 0.001 : 0.3;
  }
}
BENCHMARK(BM_Inversions);

BENCHMARK_MAIN();
