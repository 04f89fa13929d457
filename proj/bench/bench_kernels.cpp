// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "wban/analysis.hpp"
#include "wban/montecarlo.hpp"
#include "wban/scheme.hpp"

namespace {

wban::MultiGraph nine_sensor_graph() {
  return wban::to_graph(wban::generate_interleaved(wban::derive_params(9, 3, 2), 3));
}

void BM_CensusSerial(benchmark::State& state) {
  const auto g = nine_sensor_graph();
  for (auto _ : state) benchmark::DoNotOptimize(wban::census_serial(g));
}
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);

void BM_CensusParallel(benchmark::State& state) {
  const auto g = nine_sensor_graph();
  for (auto _ : state) benchmark::DoNotOptimize(wban::census_parallel(g));
}
BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SimulateSerial(benchmark::State& state) {
  const auto g = nine_sensor_graph();
  const wban::TrialConfig config{0.8, static_cast<std::uint64_t>(state.range(0)), 1, 8};
  for (auto _ : state) benchmark::DoNotOptimize(wban::simulate_serial(g, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateSerial)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_SimulateParallel(benchmark::State& state) {
  const auto g = nine_sensor_graph();
  const wban::TrialConfig config{0.8, static_cast<std::uint64_t>(state.range(0)), 1, 8};
  for (auto _ : state) benchmark::DoNotOptimize(wban::simulate(g, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateParallel)->Arg(1 << 18)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
