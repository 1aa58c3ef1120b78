// Serial reference against the OpenMP path for the three parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "quasihom/families.hpp"
#include "quasihom/killing.hpp"

using namespace quasihom;

namespace {

Assembly mode(const benchmark::State& state) { return state.range(0) ? Assembly::Parallel : Assembly::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_KillingAssembly(benchmark::State& state) {
  const FamilyParams p{Rational(3), Rational(1)};
  const Metric g = metric_gCD(p);
  const int degree = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto sys = assemble_killing_system(g, degree, zero_rate(), mode(state));
    benchmark::DoNotOptimize(sys);
  }
  label(state);
}
BENCHMARK(BM_KillingAssembly)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto values = grid_values(-2, 2, Rational(1, 2));
  for (auto _ : state) {
    auto cells = sweep_family(values, values, mode(state));
    benchmark::DoNotOptimize(cells);
  }
  label(state);
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NumericSampling(benchmark::State& state) {
  const FamilyParams p{Rational(-2), Rational(1)};
  const auto fields = solve_killing(metric_gCD(p), 2, {zero_rate(), Rate{-p.d, 0, 0}}).fields;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<PointD> points(static_cast<std::size_t>(state.range(1)));
  for (auto& q : points) q = {u(rng), u(rng), u(rng)};
  for (auto _ : state) {
    auto ranks = sample_evaluation_ranks(fields, points, mode(state));
    benchmark::DoNotOptimize(ranks);
  }
  label(state);
}
BENCHMARK(BM_NumericSampling)->ArgsProduct({{0, 1}, {1000, 20000}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
