// Serial reference vs OpenMP trial loop on a shortened example 2.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "sparse_lad/harness.hpp"
#include "sparse_lad/scenarios.hpp"

using namespace sparse_lad;

namespace {

ScenarioConfig bench_config() {
  auto config = make_example(ExampleId::EX2);
  config.trials = 32;
  return config;
}

void BM_Serial(benchmark::State& state) {
  const auto config = bench_config();
  for (auto _ : state) {
    auto result = run_experiment_serial(config, 7);
    benchmark::DoNotOptimize(result.series.front().values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.trials));
}
BENCHMARK(BM_Serial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OpenMP(benchmark::State& state) {
  const auto config = bench_config();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto result = run_experiment(config, 7, threads);
    benchmark::DoNotOptimize(result.series.front().values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.trials));
}
BENCHMARK(BM_OpenMP)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_FilterStep(benchmark::State& state) {
  const auto algorithm = static_cast<Algorithm>(state.range(0));
  const auto params = default_params(algorithm);
  FilterState filter(16);
  std::vector<double> x(16);
  for (std::size_t m = 0; m < x.size(); ++m) x[m] = 0.1 * static_cast<double>(m) - 0.7;
  double d = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(filter, params, x, d));
    d = -d;
  }
  state.SetLabel(std::string(to_string(algorithm)));
}
BENCHMARK(BM_FilterStep)->DenseRange(0, 5);

}  // namespace

BENCHMARK_MAIN();
