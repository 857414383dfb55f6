#include <benchmark/benchmark.h>

#include "fracpos/random.hpp"
#include "oracles.hpp"

using namespace fracpos;

static void BM_BruteForce2x2(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  Rng rng(3);
  const HermitianOperator w({2, 2}, random_hermitian(4, rng));
  const auto level = FractionalLevel::make(1.5, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracles::lambda_bruteforce_2x2(w, level, {res, res, 40}));
  }
}
BENCHMARK(BM_BruteForce2x2)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
