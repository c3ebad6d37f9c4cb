#include <benchmark/benchmark.h>

#include "kacscope/ellreg.hpp"
#include "kacscope/kac.hpp"
#include "kacscope/reductions.hpp"
#include "kacscope/thomae.hpp"

using namespace kacscope;

namespace {

const char* const kSpecs[] = {"G2", "F4", "E6", "E7", "E8", "D12", "2A12"};

void BM_SubsetScan(benchmark::State& state) {
  const auto d = affine::build(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(thomae::equality_subsets(d));
  state.SetLabel(d.spec());
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << d.size()) - 1));
}
BENCHMARK(BM_SubsetScan)->DenseRange(0, 6);

void BM_EnumerateClasses(benchmark::State& state) {
  const auto d = affine::build("E8");
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kac::enumerate_classes(d, m));
}
BENCHMARK(BM_EnumerateClasses)->Arg(6)->Arg(12)->Arg(18);

void BM_Crosscheck(benchmark::State& state) {
  const auto d = affine::build(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(ellreg::crosscheck(d));
  state.SetLabel(d.spec());
}
BENCHMARK(BM_Crosscheck)->DenseRange(0, 6);

void BM_CatalogCertification(benchmark::State& state) {
  const auto ids = affine::catalog(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& id : ids) benchmark::DoNotOptimize(thomae::equality_subsets(affine::build(id)));
}
BENCHMARK(BM_CatalogCertification)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Refine(benchmark::State& state) {
  const auto d = affine::build("B12");
  const auto j = NodeSet::of({3, 4, 5, 6, 7, 8, 9, 10});
  for (auto _ : state) benchmark::DoNotOptimize(reductions::refine(d, j));
}
BENCHMARK(BM_Refine);

}  // namespace
BENCHMARK_MAIN();
