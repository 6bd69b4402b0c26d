#include <benchmark/benchmark.h>

#include "steenrod/grouptheory.hpp"
#include "steenrod/kernels.hpp"

namespace {

using namespace steenrod;

const FiniteGroupTable& group() {
  static const FiniteGroupTable g = [] {
    EnumerateOptions o;
    o.parallel = false;
    return enumerate_group(steenrod_quotient(2, 3), 3, o);
  }();
  return g;
}

void BM_TableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::build_table_serial(group()));
}

void BM_TableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::build_table_parallel(group()));
}

void BM_CommutatorsSerial(benchmark::State& state) {
  const auto all = whole_group(group());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commutator_set_serial(group(), all, all));
}

void BM_CommutatorsParallel(benchmark::State& state) {
  const auto all = whole_group(group());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commutator_set_parallel(group(), all, all));
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::complementarity_sweep_serial(3, 1, 4));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::complementarity_sweep_parallel(3, 1, 4));
}

}  // namespace

BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutatorsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommutatorsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
