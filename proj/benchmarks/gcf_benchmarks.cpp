// Micro-benchmarks for the hot paths: recurrence evaluation on both
// backends, denominator clearing, series folding, and spec (de)serialization.
// Depth ranges are chosen so the bignum growth regimes are visible.

#include <benchmark/benchmark.h>

#include "gcflab/catalog.hpp"
#include "gcflab/generate.hpp"
#include "gcflab/io.hpp"
#include "gcflab/transforms.hpp"

using namespace gcflab;

namespace {

series_spec pi_thirds_series() {
  const polyq one{1};
  return series_spec::from_sum(
      {{one, polyq{-5, 6}, true}, {one, polyq{-1, 6}, true}});
}

}  // namespace

// factorial-sized integers: cost is dominated by bignum multiplication
static void BM_EvalExactFactorialGrowth(benchmark::State& state) {
  const cf_spec& spec = catalog_get("e_half").spec;
  const long depth = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eval_exact(spec, depth));
  state.SetComplexityN(depth);
}
BENCHMARK(BM_EvalExactFactorialGrowth)->Range(16, 2048)->Complexity();

// polynomial terms keep integers slimmer; same recurrence, different regime
static void BM_EvalExactPolynomialTerms(benchmark::State& state) {
  const cf_spec& spec = catalog_get("pi_thirds").spec;
  const long depth = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eval_exact(spec, depth));
  state.SetComplexityN(depth);
}
BENCHMARK(BM_EvalExactPolynomialTerms)->Range(16, 1024)->Complexity();

static void BM_EvalApproxDepth(benchmark::State& state) {
  const cf_spec& spec = catalog_get("pi_thirds").spec;
  const long depth = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate(spec, depth, backend::approx, 256));
}
BENCHMARK(BM_EvalApproxDepth)->Range(256, 16384);

static void BM_EvalApproxPrecision(benchmark::State& state) {
  const cf_spec& spec = catalog_get("pi_thirds").spec;
  const int precision = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate(spec, 2000, backend::approx, precision));
}
BENCHMARK(BM_EvalApproxPrecision)->RangeMultiplier(4)->Range(64, 4096);

// includes the scalar-family solve, the per-term emission, and the
// integrality checks
static void BM_ClearDenominators(benchmark::State& state) {
  const cf_spec folded = series_to_cf(pi_thirds_series());
  const long depth = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(clear_denominators(folded, depth));
}
BENCHMARK(BM_ClearDenominators)->Range(8, 512);

static void BM_SeriesPartialSum(benchmark::State& state) {
  const series_spec series = pi_thirds_series();
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(partial_sum(series, n));
}
BENCHMARK(BM_SeriesPartialSum)->Range(16, 1024);

static void BM_DerangementOracle(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_convergent("e_minus_2", n));
}
BENCHMARK(BM_DerangementOracle)->Range(16, 1024);

static void BM_SpecJsonRoundTrip(benchmark::State& state) {
  const cf_spec& spec = catalog_get("pi_thirds").spec;
  for (auto _ : state) {
    const std::string text = spec_to_json(spec);
    benchmark::DoNotOptimize(spec_from_json(text));
  }
}
BENCHMARK(BM_SpecJsonRoundTrip);

BENCHMARK_MAIN();
