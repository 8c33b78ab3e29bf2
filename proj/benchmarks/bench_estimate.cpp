#include <benchmark/benchmark.h>

#include "mrwlab/estimate.hpp"
#include "mrwlab/simulate.hpp"
#include "mrwlab/window_scan.hpp"

namespace {

mrwlab::Series path(std::size_t n) {
  mrwlab::MrwParams p;
  p.lambda2 = 0.02;
  p.decorr_length = 4096.0;
  return mrwlab::simulate_mrw(p, n, 1);
}

// Covers both execution strategies: small inputs run the direct per-lag
// loops, large ones the FFT cross-correlation route.
void BM_LogAbsCov(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = path(n);
  const int max_lag = static_cast<int>(n / 10);
  for (auto _ : state) {
    auto curve = mrwlab::log_abs_cov(x, max_lag);
    benchmark::DoNotOptimize(curve.cov.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_LogAbsCov)->Range(1 << 13, 1 << 18);

void BM_MomentScaling(benchmark::State& state) {
  const auto x = path(1 << 17);
  const std::vector<double> qs{1, 2, 3, 4, 5};
  const std::vector<int> scales{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  for (auto _ : state) {
    auto table = mrwlab::moment_scaling(x, qs, scales);
    benchmark::DoNotOptimize(table.moment.data());
  }
}
BENCHMARK(BM_MomentScaling);

void BM_WindowScan(benchmark::State& state) {
  const auto x = path(1 << 16);
  mrwlab::WindowScanConfig cfg;
  cfg.window = 1 << 14;
  cfg.stride = 1 << 12;
  for (auto _ : state) {
    auto scan = mrwlab::window_scan(x, cfg);
    benchmark::DoNotOptimize(scan.data());
  }
}
BENCHMARK(BM_WindowScan);

}  // namespace
