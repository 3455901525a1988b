#include <benchmark/benchmark.h>

#include "rootgap/bounds.hpp"
#include "rootgap/covariance.hpp"
#include "rootgap/report.hpp"

namespace {

using rootgap::PolynomialFamily;

void BM_ComputeRootsHermite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rootgap::compute_roots(PolynomialFamily::hermite(), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeRootsHermite)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_ComputeRootsJacobi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = PolynomialFamily::jacobi(1.0, -0.9);
  for (auto _ : state) benchmark::DoNotOptimize(rootgap::compute_roots(f, n));
}
BENCHMARK(BM_ComputeRootsJacobi)->RangeMultiplier(2)->Range(8, 512);

void BM_DenseEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = rootgap::inverse_covariance(rootgap::compute_roots(PolynomialFamily::laguerre(2.0), n));
  for (auto _ : state) benchmark::DoNotOptimize(rootgap::dense_eigenvalues(s.matrix));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseEigenvalues)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

void BM_AllBounds(benchmark::State& state) {
  const auto z = rootgap::compute_roots(PolynomialFamily::jacobi(2.0, 3.0), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rootgap::all_bounds(z));
}
BENCHMARK(BM_AllBounds)->Arg(10)->Arg(40)->Arg(160);

void BM_DefaultBoundSweep(benchmark::State& state) {
  rootgap::SweepConfig config;
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rootgap::run_bounds(config));
}
BENCHMARK(BM_DefaultBoundSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
