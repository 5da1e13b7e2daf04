#pragma once

#include "outercomm/integer.hpp"
#include "outercomm/variety.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace outercomm {

/// Immutable binary commutator tree over generators x_1, x_2, ... (1-based).
/// Weight and the set of occurring generators are cached at construction.
/// Copies share structure.
class Commutator {
 public:
  static Commutator generator(std::uint32_t index);
  static Commutator bracket(Commutator left, Commutator right);

  bool is_generator() const noexcept;
  /// Only meaningful for generators.
  std::uint32_t generator_index() const noexcept;
  /// Only meaningful for brackets.
  const Commutator& left() const noexcept;
  const Commutator& right() const noexcept;

  std::uint64_t weight() const noexcept;
  /// Sorted, duplicate-free generator indices appearing in the tree.
  const std::vector<std::uint32_t>& occurrence() const noexcept;
  bool occurs(std::uint32_t index) const noexcept;
  std::uint32_t highest_generator() const noexcept { return occurrence().back(); }

  /// Structural equality.
  friend bool operator==(const Commutator& a, const Commutator& b) noexcept;

 private:
  struct Node;
  explicit Commutator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The basic-commutator ordering: lower weight first; generators by index;
/// equal-weight brackets lexicographically on (left, right).
std::strong_ordering compare(const Commutator& a, const Commutator& b) noexcept;

/// Strict-weak-order functor for compare().
struct CommutatorOrder {
  bool operator()(const Commutator& a, const Commutator& b) const noexcept { return compare(a, b) < 0; }
};

/// Generators are basic. [u, v] is basic iff u and v are basic, u > v, and
/// when u = [s, t] also v >= t. Evaluated structurally on the tree alone.
bool is_basic(const Commutator& c);

/// A commutator tree known to satisfy is_basic.
class BasicCommutator {
 public:
  /// nullopt when `c` is not basic.
  static std::optional<BasicCommutator> make(Commutator c);
  /// Throws DomainError when `c` is not basic.
  static BasicCommutator from(Commutator c);

  const Commutator& tree() const noexcept { return tree_; }
  std::uint64_t weight() const noexcept { return tree_.weight(); }
  bool occurs(std::uint32_t index) const noexcept { return tree_.occurs(index); }

  friend bool operator==(const BasicCommutator&, const BasicCommutator&) noexcept = default;

 private:
  friend class HallBasis;
  explicit BasicCommutator(Commutator c) : tree_(std::move(c)) {}
  Commutator tree_;
};

inline std::strong_ordering compare(const BasicCommutator& a, const BasicCommutator& b) noexcept {
  return compare(a.tree(), b.tree());
}

/// Bracket notation: "x3", "[[x2,x1],x1]".
std::string to_string(const Commutator& c);
inline std::string to_string(const BasicCommutator& c) { return to_string(c.tree()); }

/// Inverse of to_string (whitespace tolerated). Throws ParseError.
Commutator parse_commutator(std::string_view text);

/// All basic commutators on d generators up to a maximum weight, generated
/// weight by weight from products of lower weights. Each commutator carries
/// its position in the global order, so comparisons inside one basis are O(1).
class HallBasis {
 public:
  /// Refuses with ResourceLimitError when the total number of commutators of
  /// weight <= max_weight exceeds the commutator cap.
  HallBasis(std::uint32_t generators, std::uint64_t max_weight);

  std::uint32_t generators() const noexcept { return generators_; }
  std::uint64_t max_weight() const noexcept { return static_cast<std::uint64_t>(by_weight_.size()); }

  /// Ascending under CommutatorOrder. Weight must be in [1, max_weight].
  std::span<const BasicCommutator> of_weight(std::uint64_t weight) const;

  /// Global position of the i-th commutator of the given weight.
  std::size_t rank(std::uint64_t weight, std::size_t i) const;

 private:
  std::uint32_t generators_;
  std::vector<std::vector<BasicCommutator>> by_weight_;
  std::vector<std::size_t> offset_;  // global rank of the first entry of each weight
};

/// Basic commutators of weight exactly w on d generators, ascending.
std::vector<BasicCommutator> enumerate_basic(std::uint32_t d, std::uint64_t w);

/// A pair (beta, alpha) of basic commutators with beta > alpha,
/// wt(beta) = c1 + 1 and wt(alpha) = c2 + 1.
struct CommutatorPair {
  BasicCommutator beta;
  BasicCommutator alpha;

  Commutator bracket() const { return Commutator::bracket(beta.tree(), alpha.tree()); }
};

/// Every such pair on d generators, ordered by (beta, alpha). For c1 > c2
/// this is the full product of the two weight classes.
///
/// Refuses with ResourceLimitError when witt(c1+1, d) * witt(c2+1, d)
/// exceeds the commutator cap.
std::vector<CommutatorPair> build_pairs(const VarietyParams& params, std::uint32_t d);

/// True iff [beta, alpha] is itself basic for every pair from build_pairs.
/// Holds throughout c2 <= c1 <= 2*c2.
bool pairs_are_basic(const VarietyParams& params, std::uint32_t d);

/// Closed-form number of pairs on k + j generators in which x_{k+j} is the
/// highest occurring generator, i.e. the pairs whose image in the multiplier
/// has order n_j.
///
///   c1 > c2:  chi_{c1+1}(k+j) chi_{c2+1}(k+j) - chi_{c1+1}(k+j-1) chi_{c2+1}(k+j-1)
///   c1 = c2:  chi_2(chi_{c1+1}(k+j)) - chi_2(chi_{c1+1}(k+j-1))
///
/// Requires j >= 1 (DomainError otherwise).
Count torsion_block_size(const VarietyParams& params, std::uint64_t k, std::uint64_t j);

/// Per-block counts obtained by explicit enumeration of the pairs on k + t
/// generators.
struct TorsionBlockCounts {
  Count total;       ///< highest occurring generator is x_{k+j}
  Count only_beta;   ///< ... and x_{k+j} occurs in beta but not alpha
  Count only_alpha;  ///< ... in alpha but not beta
  Count both;        ///< ... in both
  /// Pairs in which x_{k+j} occurs at all, regardless of higher generators.
  Count any_occurrence;
};

/// Enumerative counterpart of torsion_block_size. Requires 1 <= j <= t.
TorsionBlockCounts enumerate_torsion_block(const VarietyParams& params, std::uint64_t k, std::uint64_t j,
                                           std::uint64_t t);

/// Closed-form sub-counts for c1 > c2, in TorsionBlockCounts layout
/// (any_occurrence left at zero).
TorsionBlockCounts torsion_block_split(const VarietyParams& params, std::uint64_t k, std::uint64_t j);

}  // namespace outercomm
