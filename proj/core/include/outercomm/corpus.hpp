#pragma once

#include "outercomm/groups.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace outercomm {

/// Every finite abelian group of order <= max_order, once per isomorphism
/// class, in invariant-factor form. Sorted by order, then by factor chain;
/// the trivial group comes first.
std::vector<FgAbelianGroup> finite_groups_up_to(std::uint64_t max_order);

struct GroupSampleOptions {
  std::uint32_t max_rank = 3;
  std::uint32_t max_chain_length = 4;
  std::uint64_t max_factor = 60;
};

/// Random group built so that normal form holds by construction: rank and
/// chain length uniform, smallest factor uniform in [2, 5], each larger factor
/// the previous one times a uniform multiplier in [1, 5]. The chain stops
/// early once a factor would exceed max_factor.
FgAbelianGroup sample_group(std::mt19937_64& rng, const GroupSampleOptions& options = {});

}  // namespace outercomm
