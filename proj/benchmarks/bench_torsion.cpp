#include <benchmark/benchmark.h>

#include "coinv/bv.hpp"
#include "coinv/example_systems.hpp"
#include "coinv/presentation.hpp"

using namespace coinv;

namespace {

const char* const kGroups[] = {"2,2", "4,6", "6,6", "2,2,2", "3,3,3"};

void BM_TorsionOfStandardData(benchmark::State& state) {
  FinAbGroup g = FinAbGroup::parse(kGroups[state.range(0)]);
  CocycleData d = CocycleData::standard(g);
  state.SetLabel(g.to_string());
  for (auto _ : state) benchmark::DoNotOptimize(torsion_of_N(d));
}
BENCHMARK(BM_TorsionOfStandardData)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_OctagonalStabilization(benchmark::State& state) {
  auto levels = static_cast<std::size_t>(state.range(0));
  auto [x, y] = octagonal_pair(levels);
  for (auto _ : state) benchmark::DoNotOptimize(torsion_stabilization(x, y, levels));
}
BENCHMARK(BM_OctagonalStabilization)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
