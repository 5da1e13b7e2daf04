#include "outercomm/groups.hpp"
#include "outercomm/matrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-50, 50);
  outercomm::IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(outercomm::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_QuotientByCyclic(benchmark::State& state) {
  const auto g = outercomm::FgAbelianGroup::from_factors(2, {60, 30, 6, 2});
  const outercomm::GroupElement x(g, {3, 5}, {12, 7, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(outercomm::quotient_by_cyclic(g, x));
}
BENCHMARK(BM_QuotientByCyclic);

}  // namespace
