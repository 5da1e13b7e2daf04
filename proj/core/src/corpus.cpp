#include "outercomm/corpus.hpp"

#include <algorithm>

namespace outercomm {

namespace {

// Chains n_1 >= n_2 >= ... with n_{i+1} | n_i and product <= budget.
void extend_chains(std::vector<std::uint64_t>& chain, std::uint64_t budget, std::vector<FgAbelianGroup>& out) {
  {
    std::vector<Integer> factors(chain.begin(), chain.end());
    out.push_back(FgAbelianGroup::from_factors(0, factors));
  }
  for (std::uint64_t next = 2; next <= budget; ++next) {
    if (!chain.empty() && chain.back() % next != 0) continue;
    chain.push_back(next);
    extend_chains(chain, budget / next, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<FgAbelianGroup> finite_groups_up_to(std::uint64_t max_order) {
  std::vector<FgAbelianGroup> out;
  if (max_order == 0) return out;
  std::vector<std::uint64_t> chain;
  extend_chains(chain, max_order, out);
  // extend_chains emits chains with n_1 chosen first, which enumerates every
  // divisor chain exactly once; order them for stable output.
  std::sort(out.begin(), out.end(), [](const FgAbelianGroup& a, const FgAbelianGroup& b) {
    const Integer oa = *a.order();
    const Integer ob = *b.order();
    if (oa != ob) return oa < ob;
    return a.invariant_factors() > b.invariant_factors();
  });
  return out;
}

FgAbelianGroup sample_group(std::mt19937_64& rng, const GroupSampleOptions& options) {
  std::uniform_int_distribution<std::uint32_t> rank_dist(0, options.max_rank);
  std::uniform_int_distribution<std::uint32_t> length_dist(0, options.max_chain_length);
  std::uniform_int_distribution<std::uint64_t> base_dist(2, 5);
  std::uniform_int_distribution<std::uint64_t> step_dist(1, 5);

  const std::uint32_t rank = rank_dist(rng);
  const std::uint32_t length = length_dist(rng);
  std::vector<Integer> ascending;
  std::uint64_t current = 0;
  for (std::uint32_t i = 0; i < length; ++i) {
    const std::uint64_t next = i == 0 ? base_dist(rng) : current * step_dist(rng);
    if (next > options.max_factor) break;
    ascending.push_back(next);
    current = next;
  }
  std::reverse(ascending.begin(), ascending.end());
  return FgAbelianGroup::from_factors(rank, ascending);
}

}  // namespace outercomm
