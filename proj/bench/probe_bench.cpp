// Serial reference probe against the OpenMP probe on the same scans.

#include <benchmark/benchmark.h>

#include "safecol/enumerate.hpp"

namespace {

// Neither bad nor good for k = 6, so the probe scans every graph up to n_max.
const safecol::CycleColouring kNeither(6, {1, 2, 3, 4, 1, 2, 3, 4});
// A good colouring of the same length.
const safecol::CycleColouring kGood(6, {1, 2, 3, 1, 2, 3, 1, 2});

void BM_ProbeSerial(benchmark::State& state) {
  const auto& c = state.range(1) ? kGood : kNeither;
  for (auto _ : state) benchmark::DoNotOptimize(safecol::safety_probe(c, static_cast<int>(state.range(0))));
}

void BM_ProbeParallel(benchmark::State& state) {
  const auto& c = state.range(1) ? kGood : kNeither;
  for (auto _ : state)
    benchmark::DoNotOptimize(safecol::safety_probe_parallel(c, static_cast<int>(state.range(0)), 0));
}

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(safecol::enumerate_disk_triangulations(8, static_cast<int>(state.range(0)), true));
}

}  // namespace

BENCHMARK(BM_ProbeSerial)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProbeParallel)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Enumerate)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
