#include "iscreen/estimators.hpp"

#include "iscreen/model.hpp"
#include "iscreen/objective.hpp"

#include <benchmark/benchmark.h>

using namespace iscreen;

namespace {

struct Fixture {
  int n;
  SimplexPoint w;
  CorruptedSample x_miss;
  CorruptedSample x_flip;
  Vec p;

  explicit Fixture(int n_, double p_val, bool mean_field = false) : n(n_) {
    Rng rng(42);
    const int dim = simplex_dim(n, mean_field);
    Vec u(dim);
    for (int i = 0; i < dim; ++i) u[i] = -std::log(1.0 - uniform01(rng));
    const double lambda = 0.8;
    u *= lambda / u.sum();
    w = SimplexPoint{u, lambda};
    SpinVec spins(n);
    for (int i = 0; i < n; ++i) spins[i] = uniform01(rng) < 0.5 ? -1 : 1;
    x_flip = CorruptedSample{spins, ChannelKind::flip};
    // keep the target entry observed so the full product path is measured
    for (int i = 1; i < n; ++i)
      if (uniform01(rng) < p_val) spins[i] = 0;
    x_miss = CorruptedSample{spins, ChannelKind::missing};
    p = Vec::Constant(n, p_val);
  }
};

void MissingEstimate(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) {
    auto est = g_miss(f.w, f.x_miss, f.p, 0);
    benchmark::DoNotOptimize(est.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MissingEstimate)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oN);

void FlipEstimate(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) {
    auto est = g_flip(f.w, f.x_flip, f.p, 0);
    benchmark::DoNotOptimize(est.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(FlipEstimate)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oN);

void MeanFieldEstimate(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)), 0.2, true);
  for (auto _ : state) {
    auto est = g_miss_meanfield(f.w, f.x_miss, f.p, 0);
    benchmark::DoNotOptimize(est.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(MeanFieldEstimate)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
