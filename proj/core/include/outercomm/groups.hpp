#pragma once

#include "outercomm/integer.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace outercomm {

/// `multiplicity` consecutive invariant factors equal to `modulus`.
struct CyclicRun {
  Integer modulus;
  Count multiplicity;

  friend bool operator==(const CyclicRun&, const CyclicRun&) = default;
};

/// Z^k + Z_{n_1} + ... + Z_{n_t} in invariant-factor form: every n_i >= 2 and
/// n_{i+1} | n_i. The torsion chain is stored run-length encoded with
/// strictly decreasing moduli, so rank and multiplicities may be arbitrarily
/// large. Default-constructs to the trivial group.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  /// Builds from runs listed from the largest modulus down. Zero-multiplicity
  /// runs are dropped and equal neighbours merged; anything else that breaks
  /// the divisibility chain throws InvalidGroupError.
  static FgAbelianGroup from_runs(Count rank, std::vector<CyclicRun> runs);

  /// Builds from an already-normal factor list (n_1, ..., n_t).
  static FgAbelianGroup from_factors(Count rank, const std::vector<Integer>& factors);

  const Count& rank() const noexcept { return rank_; }
  const std::vector<CyclicRun>& runs() const noexcept { return runs_; }

  /// t, the length of the invariant-factor chain.
  Count torsion_length() const;
  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_trivial() const noexcept { return rank_ == 0 && runs_.empty(); }

  /// |G|, or nullopt when G is infinite.
  std::optional<Integer> order() const;

  /// n_i for 1 <= i <= t (DomainError otherwise).
  Integer factor(const Count& i) const;

  /// (n_1, ..., n_t) expanded. Refuses with ResourceLimitError past the
  /// group-element cap.
  std::vector<Integer> invariant_factors() const;

  /// Rank as a machine integer, or ResourceLimitError.
  std::size_t rank_size() const;
  /// t as a machine integer, or ResourceLimitError.
  std::size_t torsion_size() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  Count rank_ = 0;
  std::vector<CyclicRun> runs_;
};

/// Literal form: "Z^2 x Z12 x Z6"; runs longer than 8 render as "Z12^m";
/// the trivial group renders as "Z^0".
std::string to_string(const FgAbelianGroup& g);

/// Invariant-factor form of Z^rank + Z_{m_1} + ... . Factors equal to 1 are
/// dropped; moduli <= 0 throw InvalidGroupError. Result does not depend on
/// the order of `moduli`.
FgAbelianGroup normalize(const Count& rank, std::span<const Integer> moduli);

/// r_0(G) = k.
inline Count torsion_free_rank(const FgAbelianGroup& g) { return g.rank(); }

/// Element of a group: k integer coordinates on the free part and t residues
/// 0 <= a_i < n_i on the torsion part.
class GroupElement {
 public:
  /// Torsion coordinates are reduced modulo their moduli. Wrong coordinate
  /// counts throw InvalidElementError.
  GroupElement(FgAbelianGroup parent, std::vector<Integer> free_coords, std::vector<Integer> torsion_coords);

  static GroupElement identity(const FgAbelianGroup& parent);

  const FgAbelianGroup& parent() const noexcept { return parent_; }
  const std::vector<Integer>& free_coords() const noexcept { return free_; }
  const std::vector<Integer>& torsion_coords() const noexcept { return torsion_; }

  bool is_identity() const noexcept;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FgAbelianGroup parent_;
  std::vector<Integer> free_;
  std::vector<Integer> torsion_;
};

/// "(1,2 | 0,3)": free coordinates, then torsion residues; "(0,3)" when k = 0.
std::string to_string(const GroupElement& x);

/// Order of x, or nullopt for infinite order.
std::optional<Integer> element_order(const GroupElement& x);

/// G / <x>, through the Smith normal form of G's relation matrix with x's
/// coordinates appended as an extra relation. Throws InvalidElementError when
/// x does not belong to G.
FgAbelianGroup quotient_by_cyclic(const FgAbelianGroup& g, const GroupElement& x);

/// Every element of a finite group exactly once, identity first, varying the
/// last torsion coordinate fastest. Single pass; not thread-shared.
class ElementRange {
 public:
  class iterator {
   public:
    using value_type = GroupElement;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const GroupElement& operator*() const { return *current_; }
    const GroupElement* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return !it.current_; }

   private:
    friend class ElementRange;
    explicit iterator(const ElementRange* range);
    const ElementRange* range_ = nullptr;
    std::vector<Integer> coords_;
    std::optional<GroupElement> current_;
  };

  /// Throws ResourceLimitError for infinite G or |G| above the cap.
  explicit ElementRange(FgAbelianGroup g);

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

  const Integer& size() const noexcept { return size_; }

 private:
  FgAbelianGroup group_;
  std::vector<Integer> moduli_;
  Integer size_;
};

inline ElementRange elements(const FgAbelianGroup& g) { return ElementRange(g); }

/// True iff the finite group H is isomorphic to a subgroup of the finite
/// group G: with H's factors padded by 1s on the right to G's length,
/// m_i | n_i at every position. Infinite arguments throw UnsupportedInputError.
bool embeds_as_subgroup(const FgAbelianGroup& h, const FgAbelianGroup& g);

}  // namespace outercomm
