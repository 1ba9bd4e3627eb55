// Serial reference kernel against the blocked kernel, with and without OpenMP.

#include <benchmark/benchmark.h>

#include "zs/kernels.hpp"
#include "zs/series.hpp"
#include "zs/specs.hpp"

namespace {

using zs::Complex;

Complex term(std::int64_t n) {
  const double x = static_cast<double>(n);
  return std::exp(-Complex(2.0, 1.0) * std::log(x)) / (Complex(x * x, 0.0) + Complex(0.3, 0.4));
}

void BM_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zs::kernels::sum_range_serial<Complex>(1, state.range(0), term).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_blocked(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zs::kernels::sum_range_blocked<Complex>(1, state.range(0), term, false).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zs::kernels::sum_range_blocked<Complex>(1, state.range(0), term, true).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_lhs_mobius(benchmark::State& state) {
  const zs::DirichletSpec mu = zs::specs::mobius();
  for (auto _ : state) benchmark::DoNotOptimize(zs::lhs_partial_fraction(mu, Complex(2.0, 1.0), 0.7).value);
}

}  // namespace

BENCHMARK(BM_serial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_blocked)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_parallel)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->UseRealTime();
BENCHMARK(BM_lhs_mobius);

BENCHMARK_MAIN();
