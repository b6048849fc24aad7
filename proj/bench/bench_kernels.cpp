// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "tricirc/cycles.hpp"
#include "tricirc/families.hpp"

using namespace tricirc;

namespace {

const SimpleGraph& sample(int k) {
  static const SimpleGraph g9 = x_graph(9), g21 = x_graph(21), g49 = x_graph(49);
  return k == 9 ? g9 : k == 21 ? g21 : g49;
}

void BM_CountCycles(benchmark::State& state) {
  const SimpleGraph& g = sample(static_cast<int>(state.range(0)));
  const int c = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_cycles(g, c).total);
}

void BM_CountCyclesSerial(benchmark::State& state) {
  const SimpleGraph& g = sample(static_cast<int>(state.range(0)));
  const int c = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_cycles_serial(g, c).total);
}

void BM_Girth(benchmark::State& state) {
  const SimpleGraph& g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}

void BM_GirthSerial(benchmark::State& state) {
  const SimpleGraph& g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(girth_serial(g));
}

}  // namespace

BENCHMARK(BM_CountCycles)->ArgsProduct({{9, 21, 49}, {8, 10, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountCyclesSerial)->ArgsProduct({{9, 21, 49}, {8, 10, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Girth)->Arg(9)->Arg(21)->Arg(49);
BENCHMARK(BM_GirthSerial)->Arg(9)->Arg(21)->Arg(49);

BENCHMARK_MAIN();
