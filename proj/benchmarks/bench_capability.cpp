#include "outercomm/capability.hpp"
#include "outercomm/corpus.hpp"

#include <benchmark/benchmark.h>

namespace {

// Oracle over every nontrivial group up to the given order.
void BM_OracleSweep(benchmark::State& state) {
  auto groups = outercomm::finite_groups_up_to(static_cast<std::uint64_t>(state.range(0)));
  std::erase_if(groups, [](const outercomm::FgAbelianGroup& g) { return g.is_trivial(); });
  const outercomm::VarietyParams params(3, 2);
  for (auto _ : state) {
    std::size_t capable = 0;
    for (const auto& g : groups) capable += outercomm::oracle_capable(g, params).capable;
    benchmark::DoNotOptimize(capable);
  }
  state.counters["groups"] = static_cast<double>(groups.size());
}
BENCHMARK(BM_OracleSweep)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ClosedFormDecider(benchmark::State& state) {
  const auto g = outercomm::FgAbelianGroup::from_factors(0, {60, 60, 30});
  const outercomm::VarietyParams params(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(outercomm::is_outer_capable(g, params));
}
BENCHMARK(BM_ClosedFormDecider);

}  // namespace
