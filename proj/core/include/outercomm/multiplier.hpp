#pragma once

#include "outercomm/groups.hpp"
#include "outercomm/integer.hpp"
#include "outercomm/variety.hpp"

#include <optional>
#include <vector>

namespace outercomm {

/// b_i: the number of basic-commutator pairs on i generators,
///   chi_{c1+1}(i) * chi_{c2+1}(i)   when c1 > c2,
///   chi_2(chi_{c1+1}(i))            when c1 = c2.
Count pair_count(const VarietyParams& params, const Count& i);

/// [b_k, b_{k+1}, ..., b_{k+t}] for G = Z^k + Z_{n_1} + ... + Z_{n_t}.
/// Expands t, so the chain must fit the element cap.
std::vector<Count> multiplier_exponents(const FgAbelianGroup& g, const VarietyParams& params);

/// The Baer invariant of G with respect to [N_c1, N_c2]:
///
///   Z^(b_k) + Z_{n_1}^(b_{k+1} - b_k) + ... + Z_{n_t}^(b_{k+t} - b_{k+t-1})
///
/// returned in normal form (zero multiplicities dropped). Works on the run
/// encoding directly, so large ranks and chains cost one witt() per run.
/// Throws InternalError if the exponents ever decrease.
FgAbelianGroup baer_invariant(const FgAbelianGroup& g, const VarietyParams& params);

/// |M| for a finite multiplier; `finite` is empty when M has positive rank.
struct MultiplierSize {
  std::optional<Count> finite;

  bool is_infinite() const noexcept { return !finite.has_value(); }
  friend bool operator==(const MultiplierSize&, const MultiplierSize&) = default;
};

/// Size of baer_invariant(g, params). Refuses with ResourceLimitError when
/// the exact value would need more than 2^24 bits.
MultiplierSize baer_invariant_size(const FgAbelianGroup& g, const VarietyParams& params);

/// Size of an already-computed group, under the same conventions.
MultiplierSize group_size(const FgAbelianGroup& m);

}  // namespace outercomm
