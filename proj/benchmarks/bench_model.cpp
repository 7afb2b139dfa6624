#include <benchmark/benchmark.h>

#include <thread>

#include "symcool/dynamics.hpp"
#include "symcool/pipeline.hpp"
#include "symcool/sweep.hpp"

namespace {

using namespace symcool;

SystemConfig reference_config() {
  SystemConfig cfg;
  cfg.atoms.axial_frequency = AngularRate::from_hz(45e3);
  cfg.cavity.detection_power = 10e-6;
  return cfg;
}

SweepSpec design_grid_spec() {
  SweepSpec spec;
  spec.base = reference_config();
  spec.held = HeldRules::from(spec.base);
  spec.radius = {50e-9, 300e-9, 26, false};
  spec.atoms = {1e6, 1e8, 21, true};
  return spec;
}

void BM_Evaluate(benchmark::State& state) {
  const auto cfg = reference_config();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(cfg));
}
BENCHMARK(BM_Evaluate);

void BM_DesignGridSweep(benchmark::State& state) {
  const auto spec = design_grid_spec();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, threads));
  state.SetItemsProcessed(state.iterations() * 546);
}
BENCHMARK(BM_DesignGridSweep)->Arg(1)->Arg(static_cast<int>(std::max(2u, std::thread::hardware_concurrency())));

void BM_CoolingTrace(benchmark::State& state) {
  const auto b = evaluate(reference_config()).rates;
  const double dt = 0.1 * max_time_step(b);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_occupation(b, b.thermal_occupation, 1e-3, dt, 0.5e-3));
}
BENCHMARK(BM_CoolingTrace);

void BM_NormalModes(benchmark::State& state) {
  const auto b = evaluate(reference_config()).rates;
  for (auto _ : state) benchmark::DoNotOptimize(normal_modes(b));
}
BENCHMARK(BM_NormalModes);

}  // namespace

BENCHMARK_MAIN();
