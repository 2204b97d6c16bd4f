#include "asmtss/asm.hpp"
#include "asmtss/lgv.hpp"
#include "asmtss/nilp.hpp"
#include "asmtss/partition_fn.hpp"
#include "asmtss/residue.hpp"
#include "asmtss/sampling.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace asmtss;

void BM_EnumerateAsms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asm6v::enumerate_asms(n));
}
BENCHMARK(BM_EnumerateAsms)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateNilps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilp::enumerate_nilps(n));
}
BENCHMARK(BM_EnumerateNilps)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_GenfunAsm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asm6v::genfun_doubly_refined(n, Convention::kTilde));
}
BENCHMARK(BM_GenfunAsm)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_GenfunNilp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilp::genfun_U(n, 0, 1));
}
BENCHMARK(BM_GenfunNilp)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Lgv(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilp::lgv_genfun_xy(n));
}
BENCHMARK(BM_Lgv)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_IntegralA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(residue::integral_A(n));
}
BENCHMARK(BM_IntegralA)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_IntegralU(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto form = state.range(1) == 0 ? residue::UForm::kRaw : residue::UForm::kAfterU1;
  for (auto _ : state) benchmark::DoNotOptimize(residue::integral_U(n, form));
}
BENCHMARK(BM_IntegralU)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SchurStaircase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SamplePoints rng(7);
  std::vector<Cyclo> z;
  for (int i = 0; i < 2 * n; ++i) z.push_back(rng.cyclo());
  for (auto _ : state) benchmark::DoNotOptimize(pfn::schur_staircase(n, z));
}
BENCHMARK(BM_SchurStaircase)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_ZprimeResidueSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SamplePoints rng(11);
  std::vector<Cyclo> z;
  for (int i = 0; i < 2 * n; ++i) z.push_back(rng.cyclo());
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(pfn::zprime_residue_sum(n, z));
    } catch (const std::domain_error&) {
    }
  }
}
BENCHMARK(BM_ZprimeResidueSum)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
