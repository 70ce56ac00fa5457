#include <benchmark/benchmark.h>

#include <random>

#include "coinv/zlinalg.hpp"

using namespace coinv;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> e(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = e(rng);
  return m;
}

void BM_SmithWithTransforms(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithWithTransforms)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SmithDiagonalOnly(benchmark::State& state) {
  IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_decompose(a, SNFOptions{false, false, false}));
}
BENCHMARK(BM_SmithDiagonalOnly)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace
