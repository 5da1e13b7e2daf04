#include "outercomm/arith.hpp"
#include "outercomm/hall.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Witt(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(outercomm::witt(n, 1000));
}
BENCHMARK(BM_Witt)->Arg(6)->Arg(30)->Arg(210);

void BM_CountLyndon(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(outercomm::count_lyndon(n, 3));
}
BENCHMARK(BM_CountLyndon)->DenseRange(6, 10, 2);

void BM_EnumerateBasic(benchmark::State& state) {
  const auto w = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(outercomm::enumerate_basic(3, w));
}
BENCHMARK(BM_EnumerateBasic)->DenseRange(4, 8, 2);

}  // namespace
