// Serial reference against the OpenMP path for the two data-parallel kernels.

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "qxr/export.hpp"
#include "qxr/report.hpp"

using namespace qxr;

namespace {

const qxr::testing::Fixture& clifford() {
  static const auto all = qxr::testing::fixture_matrix();
  return all[2];
}

void BM_EvaluateSamples(benchmark::State& state) {
  const auto ph = clifford().build();
  const auto pts = sample_points(ph, static_cast<int>(state.range(1)), 1e-4, 1);
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_samples(ph, &ph, pts, 1e-4, exec));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_EvaluateSamples)->ArgsProduct({{0, 1}, {64, 512}})->Unit(benchmark::kMillisecond);

void BM_SampleGrid(benchmark::State& state) {
  const auto ph = clifford().build();
  GridSpec g;
  const int r = static_cast<int>(state.range(1));
  g.u_resolution = {r, r};
  g.s_range = {-0.4, 0.4};
  g.s_resolution = r;
  const auto exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(sample_grid(ph, g, exec));
  state.SetItemsProcessed(state.iterations() * r * r * r);
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_SampleGrid)->ArgsProduct({{0, 1}, {16, 48}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
