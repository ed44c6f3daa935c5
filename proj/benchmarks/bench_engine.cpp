#include <benchmark/benchmark.h>

#include "ticksim/engine.hpp"

namespace {

using namespace ticksim;

ScenarioConfig bench_config() {
  ScenarioConfig config;
  config.dP_A = 0.01;
  config.dP_B = 0.001;
  config.seed = 3;
  return config;
}

// Whole-engine throughput in ticks per second, past the warmup phase.
static void BM_EngineStep(benchmark::State& state) {
  ScenarioConfig config = bench_config();
  config.total_steps = 1 << 30;  // never reached
  RunOptions options;
  options.record_trades = false;
  options.record_prices = false;
  Simulation simulation(config, options);
  for (int i = 0; i < 30000; ++i) simulation.step();  // past warmup
  for (auto _ : state) simulation.step();
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EngineStep);

static void BM_FullRun100k(benchmark::State& state) {
  ScenarioConfig config = bench_config();
  config.total_steps = 100000;
  RunOptions options;
  options.record_trades = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Simulation::run(config, options));
  }
  state.SetItemsProcessed(state.iterations() * config.total_steps);
}
BENCHMARK(BM_FullRun100k)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
