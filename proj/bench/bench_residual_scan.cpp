// Serial reference scan vs the OpenMP scan on the certification fields.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "hypwave/residual.hpp"
#include "hypwave/scenario.hpp"

namespace {

hypwave::ScenarioConfig config_for(int index, int n) {
  hypwave::ScenarioConfig cfg = hypwave::certification_matrix().at(static_cast<std::size_t>(index)).config;
  cfg.grid.nx = n;
  cfg.grid.nt = n;
  return cfg;
}

void BM_ScanSerial(benchmark::State& state) {
  const auto cfg = config_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto eq = hypwave::make_equation(cfg);
  const auto field = hypwave::make_field(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypwave::residual_scan_serial(eq, field, cfg.grid));
  }
  state.SetItemsProcessed(state.iterations() * cfg.grid.points());
  state.SetLabel(cfg.equation + "/" + cfg.field);
}

void BM_ScanOpenMP(benchmark::State& state) {
  const auto cfg = config_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto eq = hypwave::make_equation(cfg);
  const auto field = hypwave::make_field(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypwave::residual_scan(eq, field, cfg.grid));
  }
  state.SetItemsProcessed(state.iterations() * cfg.grid.points());
  state.SetLabel(cfg.equation + "/" + cfg.field + " threads=" + std::to_string(omp_get_max_threads()));
}

// {case index, grid side}: plane wave (cheap), q-Gaussian packet, Kummer series.
#define SCAN_ARGS ->Args({0, 101})->Args({3, 101})->Args({6, 101})->Unit(benchmark::kMillisecond)

BENCHMARK(BM_ScanSerial) SCAN_ARGS;
BENCHMARK(BM_ScanOpenMP) SCAN_ARGS;

}  // namespace

BENCHMARK_MAIN();
