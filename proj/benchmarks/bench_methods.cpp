#include <benchmark/benchmark.h>

#include <cmath>

#include <mfcc/mfcc.hpp>

namespace {

mfcc::OscProblem model(double lo, double k) {
  return {[](mfcc::complex x) { return (x - 1.0) / (1.0 + x * x); },
          [](mfcc::complex x) { return std::sqrt(x * x + 3.0 * x + 4.0); }, lo, 1.0, k, std::nullopt};
}

void BM_Method1(benchmark::State& state) {
  const auto p = model(0.0, 1000.0);
  const auto M = static_cast<std::size_t>(state.range(0));
  const auto N = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mfcc::method1_integrate(p, M, N).value);
  state.counters["MN"] = static_cast<double>(M * N);
}
BENCHMARK(BM_Method1)->ArgsProduct({{2, 8, 32}, {4, 8, 16, 32}});

void BM_Method2(benchmark::State& state) {
  const auto p = model(-1.0, 1000.0);
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto s = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mfcc::method2_integrate(p, N, 1000 * N, s).value);
}
BENCHMARK(BM_Method2)->ArgsProduct({{4, 8, 16, 32, 64}, {2, 4}});

void BM_Graded(benchmark::State& state) {
  const mfcc::OscProblem p{[](mfcc::complex x) { return (x - 1.0) / (1.0 + x * x); },
                           [](mfcc::complex x) { return x * x * x * x; }, 0.0, 1.0, 1000.0, std::nullopt};
  mfcc::GradedParams gp;
  gp.n_order = 3;
  gp.N = 8;
  gp.M = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mfcc::graded_integrate(p, gp).value);
}
BENCHMARK(BM_Graded)->RangeMultiplier(2)->Range(100, 800);

void BM_Weights(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const double k = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mfcc::fcc_weights(N, k).omega.data());
}
BENCHMARK(BM_Weights)->ArgsProduct({{8, 64, 512}, {1, 100, 10000}});

void BM_ChebCoeffs(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto t = mfcc::cc_nodes(N).nodes;
  std::vector<double> v;
  for (double x : t) v.push_back(std::exp(x));
  for (auto _ : state) benchmark::DoNotOptimize(mfcc::cheb_coeffs(std::span<const double>(v)).alpha.data());
}
BENCHMARK(BM_ChebCoeffs)->RangeMultiplier(4)->Range(16, 4096);

void BM_Oracle(benchmark::State& state) {
  const auto p = model(0.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mfcc::oracle_integrate(p));
}
BENCHMARK(BM_Oracle)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
