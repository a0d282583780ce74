#include <benchmark/benchmark.h>

#include "cta/controller.hpp"
#include "cta/experiment.hpp"
#include "cta/resolvent.hpp"

namespace {

const cta::Gains kGains(160.236, 60.3738, 28.5, 15.0, 5.0);

void BM_NestedProjection(benchmark::State& state) {
  const cta::Interval cone(-0.3, 1.7);
  double x = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cta::nested_projection(cone, x, 0.25));
    x += 1e-9;
  }
}
BENCHMARK(BM_NestedProjection);

void BM_ExplicitStep(benchmark::State& state) {
  const auto s = cta::ControllerState::initial(8.0, -12.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cta::explicit_step(8.0, -12.0, s, kGains, 1e-3));
  }
}
BENCHMARK(BM_ExplicitStep);

void BM_ImplicitStep(benchmark::State& state) {
  const auto s = cta::ControllerState::initial(8.0, -12.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cta::implicit_step(8.0, -12.0, s, kGains, 1e-3));
  }
}
BENCHMARK(BM_ImplicitStep);

void BM_Simulation(benchmark::State& state) {
  const auto cfg = cta::preset_config(state.range(0) ? "paper-implicit" : "paper-explicit");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cta::run_simulation(cfg));
  }
}
BENCHMARK(BM_Simulation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
