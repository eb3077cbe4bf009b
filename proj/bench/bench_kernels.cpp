// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "ybe/census.hpp"
#include "ybe/sconstruct.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

SParams bench_params() {
  AbGroup g({4, 2});
  return SParams{g, 4, parse_elements(g, "0,0;1,0;1,0;2,1")};
}

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census_serial(state.range(0), {true, false, 1}));
}

void BM_CensusParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(state.range(0), {true, false, 0}));
}

void BM_BraidSerial(benchmark::State& state) {
  auto s = build_solution(bench_params());
  for (auto _ : state) benchmark::DoNotOptimize(verify_braid_serial(s));
}

void BM_BraidParallel(benchmark::State& state) {
  auto s = build_solution(bench_params());
  for (auto _ : state) benchmark::DoNotOptimize(verify_braid(s));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BraidSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BraidParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
