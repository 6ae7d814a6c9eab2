#include "iscreen/recovery.hpp"

#include "iscreen/model.hpp"

#include <benchmark/benchmark.h>

using namespace iscreen;

namespace {

IsingModel bench_cycle(int n) {
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    a(i, j) = 0.4;
    a(j, i) = 0.4;
  }
  return make_ising_model(a, Vec::Zero(n));
}

std::vector<CorruptedSample> bench_samples(const IsingModel& m, long count) {
  GibbsSampler gibbs(m, 100 * m.n, 10, Rng(7));
  std::vector<CorruptedSample> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i)
    out.push_back(CorruptedSample{gibbs.next().spins, ChannelKind::missing});
  return out;
}

// One full neighborhood run; wall time should scale linearly with n at fixed T.
void NeighborhoodRecovery(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const long T = 20000;
  const IsingModel m = bench_cycle(n);
  const auto samples = bench_samples(m, T);
  RecoveryConfig cfg;
  cfg.lambda_budget = m.width;
  cfg.channel = make_uniform_channel(ChannelKind::missing, n, 0.0);
  cfg.iterations_T = T;
  cfg.beta_threshold = 0.4;
  cfg.parallel = false;
  for (auto _ : state) {
    auto v = recover_neighborhood(samples, 0, cfg);
    benchmark::DoNotOptimize(v.coords.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(NeighborhoodRecovery)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void GibbsSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IsingModel m = bench_cycle(n);
  GibbsSampler gibbs(m, 10, 1, Rng(11));
  for (auto _ : state) {
    auto s = gibbs.next();
    benchmark::DoNotOptimize(s.spins.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(GibbsSweep)->RangeMultiplier(2)->Range(8, 128)->Complexity();

}  // namespace

BENCHMARK_MAIN();
