#include <benchmark/benchmark.h>

#include "hilbert/laurent.hpp"
#include "hilbert/o2.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/s1.hpp"
#include "hilbert/semidirect.hpp"

using namespace hilbert;

namespace {

void BM_S1Max(benchmark::State& st) {
  WeightVector a{-1, -2, 1, 2};
  for (auto _ : st) benchmark::DoNotOptimize(hilb_s1_max(a, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_S1Max)->Arg(0)->Arg(2)->Arg(-4);

void BM_S1MaxDirect(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hilb_s1_max({-2, 2, 5}, -4, S1Options{false, nullptr}));
}
BENCHMARK(BM_S1MaxDirect);

void BM_S1MaxWide(benchmark::State& st) {
  WeightVector a{-5, -3, 2, 4, 5};
  a.resize(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(hilb_s1_max(a, 1));
}
BENCHMARK(BM_S1MaxWide)->DenseRange(2, 5);

void BM_S1Univariate(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hilb_s1_univariate({-5, 3, -4, 2}, 3));
}
BENCHMARK(BM_S1Univariate);

void BM_S1Cotangent(benchmark::State& st) {
  WeightVector a{-3, 2, 5, -4};
  a.resize(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(hilb_s1_cotangent_bigraded(a, 0));
}
BENCHMARK(BM_S1Cotangent)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_O2Max(benchmark::State& st) {
  O2Rep r{{1, 2, 3}, 1};
  for (auto _ : st) benchmark::DoNotOptimize(hilb_o2_max(r, O2Target::tau(2)));
}
BENCHMARK(BM_O2Max);

void BM_O2Onshell(benchmark::State& st) {
  O2Rep r{{1, 2}, static_cast<int>(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(hilb_o2_onshell_univariate(r));
}
BENCHMARK(BM_O2Onshell)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SeriesBox(benchmark::State& st) {
  FactoredRatFun f = hilb_s1_max({-1, -2, 1, 2}, 0);
  std::vector<int> bounds(4, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(series_box(f, bounds));
}
BENCHMARK(BM_SeriesBox)->Arg(5)->Arg(8);

void BM_OracleS1(benchmark::State& st) {
  WeightVector a{-1, -2, 1, 2};
  std::vector<int> bounds(4, static_cast<int>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(oracle_series([&](const std::vector<int>& d) { return oracle_s1_dim(a, 0, d); }, bounds));
}
BENCHMARK(BM_OracleS1)->Arg(5)->Arg(8);

void BM_LaurentAtOne(benchmark::State& st) {
  FactoredRatFun f = hilb_s1_univariate({-5, 3, -4, 2}, 3);
  for (auto _ : st) benchmark::DoNotOptimize(laurent_at_one(f, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_LaurentAtOne)->Arg(2)->Arg(6);

void BM_GammaS1(benchmark::State& st) {
  WeightVector a{-5, 3, -4, 2};
  for (auto _ : st) {
    benchmark::DoNotOptimize(gamma_s1(a, 3, 0));
    benchmark::DoNotOptimize(gamma_s1(a, 3, 1));
  }
}
BENCHMARK(BM_GammaS1);

void BM_GammaCotangent(benchmark::State& st) {
  WeightVector a{-5, 3, -4, 2};
  for (auto _ : st) benchmark::DoNotOptimize(gamma_s1_cotangent(a, 0, 0));
}
BENCHMARK(BM_GammaCotangent);

void BM_Bigraded(benchmark::State& st) {
  WeightVector a{-2, 3, 5};
  for (auto _ : st) benchmark::DoNotOptimize(gamma_bigraded_onshell(a, ExpansionOrder::TThenS, 1, 1));
}
BENCHMARK(BM_Bigraded);

void BM_Z4Reconstruct(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(z4_reconstruct(Z4Rep{{1, 1}}));
}
BENCHMARK(BM_Z4Reconstruct)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
