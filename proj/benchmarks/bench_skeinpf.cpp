#include <benchmark/benchmark.h>

#include <random>

#include "skeinpf/exactla.hpp"
#include "skeinpf/oracle.hpp"
#include "skeinpf/series.hpp"
#include "skeinpf/skeinformula.hpp"

using namespace skeinpf;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> entry(-99, 99);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

static void BM_CkOracle(benchmark::State& state) {
  const SL2Matrix g(2, 1, 3, 2);
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ck_oracle(g, k).orbit_count);
  state.counters["elements"] = static_cast<double>(ck_oracle(g, k).element_count);
}
BENCHMARK(BM_CkOracle)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CoinvOracle(benchmark::State& state) {
  const SL2Matrix g(2, 1, 3, 2);
  const CycleType ct = CycleType::from_parts({3, 3, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hh_coinv_dim_oracle(g, ct));
}
BENCHMARK(BM_CoinvOracle)->Unit(benchmark::kMillisecond);

static void BM_CkFormula(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ck_formula(Hyperbolic{4}, k));
}
BENCHMARK(BM_CkFormula)->Arg(8)->Arg(64)->Arg(512);

static void BM_DimSkein(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dim_skein(Hyperbolic{4}, n));
}
BENCHMARK(BM_DimSkein)->Arg(9)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_EulerToSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  EulerExponents c = euler_exponents(Hyperbolic{4}, order);
  for (auto _ : state) benchmark::DoNotOptimize(euler_to_series(c, order));
}
BENCHMARK(BM_EulerToSeries)->Arg(30)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SeriesToEuler(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  IntSeries s = euler_to_series(euler_exponents(Hyperbolic{4}, order), order);
  for (auto _ : state) benchmark::DoNotOptimize(series_to_euler(s));
}
BENCHMARK(BM_SeriesToEuler)->Arg(30)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
