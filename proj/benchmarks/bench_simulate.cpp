#include <benchmark/benchmark.h>

#include "mrwlab/simulate.hpp"

namespace {

mrwlab::MrwParams params() {
  mrwlab::MrwParams p;
  p.lambda2 = 0.018;
  p.decorr_length = 12975.43;
  return p;
}

void BM_SimulateOmega(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto w = mrwlab::simulate_omega(params(), n, seed++);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SimulateOmega)->Range(1 << 12, 1 << 18);

void BM_SimulateMrw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto x = mrwlab::simulate_mrw(params(), n, seed++);
    benchmark::DoNotOptimize(x.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SimulateMrw)->Range(1 << 12, 1 << 18);

void BM_SimulateOmoriEvents(benchmark::State& state) {
  mrwlab::OmoriParams p;
  p.beta_before = 0.3;
  p.beta_after = 0.7;
  p.amp_before = 38.0;
  p.amp_after = 0.95;
  p.horizon = 10000.0;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto ev = mrwlab::simulate_omori_events(p, seed++);
    benchmark::DoNotOptimize(ev.data());
  }
}
BENCHMARK(BM_SimulateOmoriEvents);

}  // namespace
