#include "outercomm/multiplier.hpp"

#include "outercomm/arith.hpp"
#include "outercomm/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace outercomm {

Count pair_count(const VarietyParams& params, const Count& i) {
  const std::uint64_t wb = params.c1() + 1;
  if (params.equal_classes()) return witt(2, witt(wb, i));
  return witt(wb, i) * witt(params.c2() + 1, i);
}

std::vector<Count> multiplier_exponents(const FgAbelianGroup& g, const VarietyParams& params) {
  const std::size_t t = g.torsion_size();
  std::vector<Count> b;
  b.reserve(t + 1);
  for (std::size_t j = 0; j <= t; ++j) b.push_back(pair_count(params, g.rank() + j));
  return b;
}

FgAbelianGroup baer_invariant(const FgAbelianGroup& g, const VarietyParams& params) {
  Count index = g.rank();
  Count previous = pair_count(params, index);
  const Count free_rank = previous;

  // A run of multiplicity m covering positions j0..j1 contributes
  // sum (b_{k+j} - b_{k+j-1}) = b_{k+j1} - b_{k+j0-1} copies of its modulus.
  std::vector<CyclicRun> runs;
  runs.reserve(g.runs().size());
  for (const auto& run : g.runs()) {
    index += run.multiplicity;
    Count current = pair_count(params, index);
    if (current < previous) {
      throw InternalError("multiplier exponents decreased at index " + index.str() + " for " + params.label());
    }
    runs.push_back({run.modulus, current - previous});
    previous = std::move(current);
  }
  return FgAbelianGroup::from_runs(free_rank, std::move(runs));
}

MultiplierSize group_size(const FgAbelianGroup& m) {
  if (!m.is_finite()) return {};
  constexpr std::uint64_t max_bits = std::uint64_t{1} << 24;
  Integer bits = 0;
  for (const auto& run : m.runs()) {
    bits += run.multiplicity * (boost::multiprecision::msb(run.modulus) + 1);
  }
  if (bits > max_bits) {
    throw ResourceLimitError("multiplier order needs about " + bits.str() + " bits; refusing to expand past 2^24 bits");
  }
  return {*m.order()};
}

MultiplierSize baer_invariant_size(const FgAbelianGroup& g, const VarietyParams& params) {
  return group_size(baer_invariant(g, params));
}

}  // namespace outercomm
