#include "outercomm/groups.hpp"

#include "outercomm/error.hpp"
#include "outercomm/limits.hpp"
#include "outercomm/matrix.hpp"

#include <algorithm>

namespace outercomm {

FgAbelianGroup FgAbelianGroup::from_runs(Count rank, std::vector<CyclicRun> runs) {
  if (rank < 0) throw InvalidGroupError("rank must be non-negative");
  FgAbelianGroup g;
  g.rank_ = std::move(rank);
  for (auto& run : runs) {
    if (run.multiplicity < 0) throw InvalidGroupError("negative multiplicity in torsion run");
    if (run.multiplicity == 0) continue;
    if (run.modulus < 2) throw InvalidGroupError("invariant factors must be >= 2, got " + run.modulus.str());
    if (!g.runs_.empty()) {
      CyclicRun& last = g.runs_.back();
      if (last.modulus == run.modulus) {
        last.multiplicity += run.multiplicity;
        continue;
      }
      if (last.modulus % run.modulus != 0) {
        throw InvalidGroupError("invariant factors must satisfy n_{i+1} | n_i: " + run.modulus.str() +
                                " does not divide " + last.modulus.str());
      }
    }
    g.runs_.push_back(std::move(run));
  }
  return g;
}

FgAbelianGroup FgAbelianGroup::from_factors(Count rank, const std::vector<Integer>& factors) {
  std::vector<CyclicRun> runs;
  runs.reserve(factors.size());
  for (const auto& n : factors) runs.push_back({n, 1});
  return from_runs(std::move(rank), std::move(runs));
}

Count FgAbelianGroup::torsion_length() const {
  Count t = 0;
  for (const auto& run : runs_) t += run.multiplicity;
  return t;
}

std::optional<Integer> FgAbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& run : runs_) {
    const auto mult = to_u64(run.multiplicity);
    if (!mult || *mult > UINT32_MAX) throw ResourceLimitError("group order too large to represent");
    n *= boost::multiprecision::pow(run.modulus, static_cast<unsigned>(*mult));
  }
  return n;
}

Integer FgAbelianGroup::factor(const Count& i) const {
  if (i < 1) throw DomainError("invariant factor index is 1-based");
  Count seen = 0;
  for (const auto& run : runs_) {
    seen += run.multiplicity;
    if (i <= seen) return run.modulus;
  }
  throw DomainError("invariant factor index " + i.str() + " exceeds t = " + seen.str());
}

std::vector<Integer> FgAbelianGroup::invariant_factors() const {
  std::vector<Integer> out;
  out.reserve(torsion_size());
  for (const auto& run : runs_) {
    for (Count c = 0; c < run.multiplicity; ++c) out.push_back(run.modulus);
  }
  return out;
}

std::size_t FgAbelianGroup::rank_size() const {
  require_within_cap(CapKind::GroupElements, rank_);
  return rank_.convert_to<std::size_t>();
}

std::size_t FgAbelianGroup::torsion_size() const {
  const Count t = torsion_length();
  require_within_cap(CapKind::GroupElements, t);
  return t.convert_to<std::size_t>();
}

std::string to_string(const FgAbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.rank() == 1) {
    parts.push_back("Z");
  } else if (g.rank() > 1) {
    parts.push_back("Z^" + g.rank().str());
  }
  for (const auto& run : g.runs()) {
    const std::string cyclic = "Z" + run.modulus.str();
    if (run.multiplicity > 8) {
      parts.push_back(cyclic + "^" + run.multiplicity.str());
    } else {
      for (Count c = 0; c < run.multiplicity; ++c) parts.push_back(cyclic);
    }
  }
  if (parts.empty()) return "Z^0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

FgAbelianGroup normalize(const Count& rank, std::span<const Integer> moduli) {
  std::vector<Integer> f;
  f.reserve(moduli.size());
  for (const auto& m : moduli) {
    if (m <= 0) throw InvalidGroupError("cyclic factor moduli must be >= 1, got " + m.str());
    if (m > 1) f.push_back(m);
  }
  // Z_a + Z_b = Z_lcm + Z_gcd; sweeping each slot against all later slots
  // leaves f[i] = lcm of the remaining factors, so the chain comes out sorted.
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const Integer g = gcd(f[i], f[j]);
      f[i] = f[i] / g * f[j];
      f[j] = g;
    }
  }
  std::erase_if(f, [](const Integer& x) { return x == 1; });
  return FgAbelianGroup::from_factors(rank, f);
}

GroupElement::GroupElement(FgAbelianGroup parent, std::vector<Integer> free_coords,
                           std::vector<Integer> torsion_coords)
    : parent_(std::move(parent)), free_(std::move(free_coords)), torsion_(std::move(torsion_coords)) {
  if (Count(free_.size()) != parent_.rank()) {
    throw InvalidElementError("element has " + std::to_string(free_.size()) + " free coordinates, group rank is " +
                              parent_.rank().str());
  }
  const auto moduli = parent_.invariant_factors();
  if (torsion_.size() != moduli.size()) {
    throw InvalidElementError("element has " + std::to_string(torsion_.size()) +
                              " torsion coordinates, group has " + std::to_string(moduli.size()));
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) torsion_[i] = mod(torsion_[i], moduli[i]);
}

GroupElement GroupElement::identity(const FgAbelianGroup& parent) {
  return GroupElement(parent, std::vector<Integer>(parent.rank_size()), std::vector<Integer>(parent.torsion_size()));
}

bool GroupElement::is_identity() const noexcept {
  auto zero = [](const Integer& x) { return x == 0; };
  return std::all_of(free_.begin(), free_.end(), zero) && std::all_of(torsion_.begin(), torsion_.end(), zero);
}

std::string to_string(const GroupElement& x) {
  auto join = [](const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
  };
  if (x.free_coords().empty()) return "(" + join(x.torsion_coords()) + ")";
  return "(" + join(x.free_coords()) + " | " + join(x.torsion_coords()) + ")";
}

std::optional<Integer> element_order(const GroupElement& x) {
  for (const auto& c : x.free_coords()) {
    if (c != 0) return std::nullopt;
  }
  const auto moduli = x.parent().invariant_factors();
  Integer order = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    order = lcm(order, moduli[i] / gcd(x.torsion_coords()[i], moduli[i]));
  }
  return order;
}

FgAbelianGroup quotient_by_cyclic(const FgAbelianGroup& g, const GroupElement& x) {
  if (!(x.parent() == g)) throw InvalidElementError("element does not belong to " + to_string(g));
  const std::size_t k = g.rank_size();
  const auto moduli = g.invariant_factors();
  const std::size_t t = moduli.size();

  // Columns: k free coordinates then t torsion coordinates. Rows: n_i e_{k+i},
  // then the coordinates of x.
  IntegerMatrix rel(t + 1, k + t);
  for (std::size_t i = 0; i < t; ++i) rel(i, k + i) = moduli[i];
  for (std::size_t c = 0; c < k; ++c) rel(t, c) = x.free_coords()[c];
  for (std::size_t i = 0; i < t; ++i) rel(t, k + i) = x.torsion_coords()[i];

  const SmithResult snf = smith_normal_form(rel);
  const auto divisors = snf.elementary_divisors();
  std::vector<Integer> torsion;
  for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
    if (*it > 1) torsion.push_back(*it);
  }
  return FgAbelianGroup::from_factors(Count(k + t - divisors.size()), torsion);
}

ElementRange::ElementRange(FgAbelianGroup g) : group_(std::move(g)) {
  if (!group_.is_finite()) throw ResourceLimitError("cannot enumerate the elements of an infinite group");
  const Integer n = *group_.order();
  require_within_cap(CapKind::GroupElements, n);
  size_ = n;
  moduli_ = group_.invariant_factors();
}

ElementRange::iterator::iterator(const ElementRange* range) : range_(range), coords_(range->moduli_.size()) {
  current_.emplace(range_->group_, std::vector<Integer>{}, coords_);
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  std::size_t i = coords_.size();
  while (i > 0) {
    --i;
    if (++coords_[i] < range_->moduli_[i]) {
      current_.emplace(range_->group_, std::vector<Integer>{}, coords_);
      return *this;
    }
    coords_[i] = 0;
  }
  current_.reset();
  return *this;
}

bool embeds_as_subgroup(const FgAbelianGroup& h, const FgAbelianGroup& g) {
  if (!h.is_finite() || !g.is_finite()) {
    throw UnsupportedInputError("embeds_as_subgroup is defined for finite groups only");
  }
  const auto m = h.invariant_factors();
  const auto n = g.invariant_factors();
  if (m.size() > n.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (n[i] % m[i] != 0) return false;
  }
  return true;
}

}  // namespace outercomm
