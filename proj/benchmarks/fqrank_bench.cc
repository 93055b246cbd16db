#include <benchmark/benchmark.h>

#include "fqrank/distributions.h"
#include "fqrank/matrix.h"
#include "fqrank/oracle.h"
#include "fqrank/random_stream.h"
#include "fqrank/sampling.h"

namespace {

void BM_EnumerateJoint(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const fqrank::FieldSpec f = fqrank::make_field(2);
  for (auto _ : state) benchmark::DoNotOptimize(fqrank::enumerate_joint(side, side, f));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (side * side)));
}
BENCHMARK(BM_EnumerateJoint)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const fqrank::FieldSpec f = fqrank::make_field_of_order(static_cast<std::uint32_t>(state.range(1)));
  fqrank::RandomStream s(7);
  std::vector<fqrank::Elem> entries(side * side);
  for (auto& x : entries) x = static_cast<fqrank::Elem>(s.uniform(f.q()));
  const fqrank::MatrixFq a(f, side, side, entries);
  for (auto _ : state) benchmark::DoNotOptimize(fqrank::rank(a));
}
BENCHMARK(BM_Rank)->Args({16, 2})->Args({64, 2})->Args({64, 251})->Args({64, 65521});

void BM_SampleRankK(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const fqrank::FieldSpec f = fqrank::make_field(3);
  fqrank::RandomStream s(11);
  for (auto _ : state) benchmark::DoNotOptimize(fqrank::sample_rank_k(side, side, side / 2, f, s));
}
BENCHMARK(BM_SampleRankK)->Arg(8)->Arg(32)->Arg(64);

void BM_Rank1WeightPmf(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fqrank::rank1_weight_pmf(side, side, 2));
}
BENCHMARK(BM_Rank1WeightPmf)->Arg(10)->Arg(25)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
