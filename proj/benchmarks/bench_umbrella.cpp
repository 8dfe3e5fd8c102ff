#include <benchmark/benchmark.h>

#include "umbrella/projective.hpp"
#include "umbrella/toric.hpp"

using namespace umbrella;

namespace {

ToricMatrix running() { return ToricMatrix(IntMatrix{{0, 1, 1, 4}, {3, 0, 2, 1}}); }

ToricMatrix wide() { return ToricMatrix(IntMatrix{{1, 1, 1, 1, 1, 1}, {0, 2, 3, 5, 1, 4}, {1, 0, 4, 2, 3, 3}}); }

void BM_ComputeUmbrella(benchmark::State& state) {
  const ToricMatrix a = running();
  const WeightVector l = parse_weights("1,1,1,2");
  for (auto _ : state) benchmark::DoNotOptimize(compute_umbrella(a, l));
}
BENCHMARK(BM_ComputeUmbrella);

void BM_ComputeUmbrellaD3(benchmark::State& state) {
  const ToricMatrix a = wide();
  const WeightVector l = parse_weights("1,2,1/2,3,1,-1");
  for (auto _ : state) benchmark::DoNotOptimize(compute_umbrella(a, l));
}
BENCHMARK(BM_ComputeUmbrellaD3);

void BM_CharCycle(benchmark::State& state) {
  const ToricMatrix a = running();
  const WeightVector l = parse_weights("1,1,1,2");
  for (auto _ : state) benchmark::DoNotOptimize(char_cycle(a, l));
}
BENCHMARK(BM_CharCycle);

void BM_ToricIdeal(benchmark::State& state) {
  const ToricMatrix a = running();
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(a));
}
BENCHMARK(BM_ToricIdeal);

void BM_InitialIdeal(benchmark::State& state) {
  const ToricMatrix a = running();
  const auto gens = toric_ideal(a);
  const WeightVector l = parse_weights("1,1,1,5");
  for (auto _ : state) benchmark::DoNotOptimize(initial_ideal(gens, l));
}
BENCHMARK(BM_InitialIdeal);

void BM_SlopesAlong(benchmark::State& state) {
  const SlopeFamily fam(running(), {3});
  for (auto _ : state) benchmark::DoNotOptimize(slopes_along(fam));
}
BENCHMARK(BM_SlopesAlong);

}  // namespace

BENCHMARK_MAIN();
