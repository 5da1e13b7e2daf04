#include "outercomm/capability.hpp"

#include "outercomm/error.hpp"
#include "outercomm/multiplier.hpp"

#include <set>

namespace outercomm {

namespace {

// First `count` invariant factors exist and are all equal to n_1.
bool leading_factors_equal(const FgAbelianGroup& g, unsigned count) {
  return !g.runs().empty() && g.runs().front().multiplicity >= count;
}

// k >= 2, or k = 0, t >= 2 and n_1 = n_2, read off the expanded factors.
bool structural_capable(const FgAbelianGroup& g) {
  if (g.rank() >= 2) return true;
  return g.rank() == 0 && g.torsion_length() >= 2 && g.factor(1) == g.factor(2);
}

}  // namespace

OuterSelector::OuterSelector(VarietyParams params) : params_(params) {
  if (params_.is_metabelian()) {
    throw MetabelianRouteError("[N_1,N_1] is the metabelian variety; use the S_2 decider");
  }
}

VarietySelector selector_for(const VarietyParams& params) {
  if (params.is_metabelian()) return MetabelianSelector{};
  return OuterSelector(params);
}

std::string to_string(const VarietySelector& selector) {
  struct {
    std::string operator()(const BaerSelector&) const { return "baer"; }
    std::string operator()(const NilpotentSelector& s) const { return "nc:" + std::to_string(s.c); }
    std::string operator()(const OuterSelector& s) const {
      return "outer:" + std::to_string(s.params().c1()) + "," + std::to_string(s.params().c2());
    }
    std::string operator()(const MetabelianSelector&) const { return "s2"; }
  } visitor;
  return std::visit(visitor, selector);
}

bool is_capable(const FgAbelianGroup& g) {
  if (g.is_finite()) return leading_factors_equal(g, 2);
  return g.rank() >= 2;
}

bool is_nc_capable(const FgAbelianGroup& g, std::uint32_t c) {
  if (c == 0) throw DomainError("N_c-capability needs c >= 1");
  return is_capable(g);
}

bool is_outer_capable(const FgAbelianGroup& g, const VarietyParams& params) {
  const OuterSelector checked(params);
  if (g.is_finite()) return leading_factors_equal(g, 2);
  return g.rank() >= 2;
}

bool is_s2_capable(const FgAbelianGroup& g) {
  return g.rank() >= 3 || (g.rank() == 0 && leading_factors_equal(g, 3));
}

bool decide(const FgAbelianGroup& g, const VarietySelector& selector) {
  struct {
    const FgAbelianGroup& g;
    bool operator()(const BaerSelector&) const { return is_capable(g); }
    bool operator()(const NilpotentSelector& s) const { return is_nc_capable(g, s.c); }
    bool operator()(const OuterSelector& s) const { return is_outer_capable(g, s.params()); }
    bool operator()(const MetabelianSelector&) const { return is_s2_capable(g); }
  } visitor{g};
  return std::visit(visitor, selector);
}

OracleVerdict oracle_capable(const FgAbelianGroup& g, const VarietyParams& params) {
  if (!g.is_finite()) {
    throw UnsupportedInputError("the capability oracle only applies to finite groups; " + to_string(g) +
                                " is infinite");
  }
  const MultiplierSize reference = baer_invariant_size(g, params);
  OracleVerdict verdict;
  for (const GroupElement& x : elements(g)) {
    if (x.is_identity()) continue;
    ++verdict.elements_checked;
    if (baer_invariant_size(quotient_by_cyclic(g, x), params) == reference) {
      verdict.witness = x;
      return verdict;
    }
  }
  verdict.capable = true;
  return verdict;
}

EquivalenceCheck check_capability_equivalence(const FgAbelianGroup& g, std::span<const VarietyParams> samples) {
  const bool reference = structural_capable(g);
  bool consistent = is_capable(g) == reference && is_nc_capable(g, 1) == reference;

  std::set<std::uint32_t> classes;
  for (const auto& p : samples) {
    classes.insert(p.c1());
    classes.insert(p.c2());
    consistent = consistent && is_outer_capable(g, p) == reference;
  }
  for (std::uint32_t c : classes) consistent = consistent && is_nc_capable(g, c) == reference;
  return {consistent, reference};
}

}  // namespace outercomm
