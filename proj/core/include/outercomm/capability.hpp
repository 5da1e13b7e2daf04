#pragma once

#include "outercomm/groups.hpp"
#include "outercomm/variety.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>

namespace outercomm {

/// Ordinary capability (the variety of abelian groups).
struct BaerSelector {
  friend bool operator==(const BaerSelector&, const BaerSelector&) = default;
};

/// N_c-capability, c >= 1.
struct NilpotentSelector {
  std::uint32_t c = 1;
  friend bool operator==(const NilpotentSelector&, const NilpotentSelector&) = default;
};

/// [N_c1, N_c2]-capability with c2 < c1 <= 2*c2 or c1 = c2 > 1.
class OuterSelector {
 public:
  /// Throws MetabelianRouteError for (1, 1).
  explicit OuterSelector(VarietyParams params);
  const VarietyParams& params() const noexcept { return params_; }
  friend bool operator==(const OuterSelector&, const OuterSelector&) = default;

 private:
  VarietyParams params_;
};

/// S_2-capability, the (1, 1) outer commutator variety.
struct MetabelianSelector {
  friend bool operator==(const MetabelianSelector&, const MetabelianSelector&) = default;
};

using VarietySelector = std::variant<BaerSelector, NilpotentSelector, OuterSelector, MetabelianSelector>;

/// OuterSelector, or MetabelianSelector when params is (1, 1).
VarietySelector selector_for(const VarietyParams& params);

/// "baer", "nc:C", "outer:C1,C2", "s2".
std::string to_string(const VarietySelector& selector);

/// k >= 2, or k = 0, t >= 2 and n_1 = n_2.
bool is_capable(const FgAbelianGroup& g);

/// N_c-capability; coincides with is_capable for every c >= 1. c = 0 throws
/// DomainError.
bool is_nc_capable(const FgAbelianGroup& g, std::uint32_t c);

/// Finite G: t >= 2 and n_1 = n_2. Infinite G: k >= 2.
/// (1, 1) throws MetabelianRouteError.
bool is_outer_capable(const FgAbelianGroup& g, const VarietyParams& params);

/// k >= 3, or k = 0, t >= 3 and n_1 = n_2 = n_3.
bool is_s2_capable(const FgAbelianGroup& g);

/// Closed-form verdict for any selector.
bool decide(const FgAbelianGroup& g, const VarietySelector& selector);

struct OracleVerdict {
  bool capable = false;
  /// First non-identity x (enumeration order) whose quotient has a
  /// multiplier of the same size; present exactly when !capable.
  std::optional<GroupElement> witness;
  std::size_t elements_checked = 0;
};

/// Brute-force capability test for a finite G: G is capable iff no
/// non-identity x gives |M(G/<x>)| = |M(G)|. Both multipliers are finite, so
/// equal size is equivalent to the natural map being injective, and every x
/// lies in the marginal subgroup of an abelian group.
///
/// Infinite G throws UnsupportedInputError; |G| above the element cap throws
/// ResourceLimitError. The trivial group is vacuously capable here.
OracleVerdict oracle_capable(const FgAbelianGroup& g, const VarietyParams& params);

struct EquivalenceCheck {
  bool consistent = false;  ///< every decider agreed
  bool verdict = false;     ///< the common verdict (meaningful when consistent)
};

/// Cross-checks the equivalent characterizations of capability for a
/// finitely generated abelian group: is_capable, is_nc_capable at c = 1 and
/// at every c1/c2 in `samples`, is_outer_capable for every sample, and the
/// structural predicate. Samples must avoid (1, 1).
EquivalenceCheck check_capability_equivalence(const FgAbelianGroup& g, std::span<const VarietyParams> samples);

}  // namespace outercomm
