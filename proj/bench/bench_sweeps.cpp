// Serial reference vs OpenMP for the sweep kernels.

#include <benchmark/benchmark.h>

#include "ptq/ep.hpp"
#include "ptq/parallel.hpp"
#include "ptq/sensing.hpp"

namespace {

ptq::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ptq::Exec::Serial : ptq::Exec::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(ptq::max_threads()));
}

void BM_SensingSweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(ptq::sensing_sweep(ptq::Kappa::Omega, 0.3, {1.4, 2.2}, n, 1.0, 1e-5, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  label(state);
}

void BM_EpCurve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(ptq::ep_curve({1.0, 3.0}, n, 1.0, {0.0, 3.0}, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  label(state);
}

}  // namespace

BENCHMARK(BM_SensingSweep)->ArgsProduct({{0, 1}, {801}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EpCurve)->ArgsProduct({{0, 1}, {201}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
