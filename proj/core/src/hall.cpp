#include "outercomm/hall.hpp"

#include "outercomm/arith.hpp"
#include "outercomm/error.hpp"
#include "outercomm/limits.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace outercomm {

struct Commutator::Node {
  std::uint32_t index = 0;  // 0 for brackets
  std::optional<Commutator> left;
  std::optional<Commutator> right;
  std::uint64_t weight = 1;
  std::vector<std::uint32_t> occurrence;
};

Commutator Commutator::generator(std::uint32_t index) {
  if (index == 0) throw DomainError("commutator generators are 1-based");
  auto node = std::make_shared<Node>();
  node->index = index;
  node->occurrence = {index};
  return Commutator(std::move(node));
}

Commutator Commutator::bracket(Commutator left, Commutator right) {
  auto node = std::make_shared<Node>();
  node->weight = left.weight() + right.weight();
  std::set_union(left.occurrence().begin(), left.occurrence().end(), right.occurrence().begin(),
                 right.occurrence().end(), std::back_inserter(node->occurrence));
  node->left = std::move(left);
  node->right = std::move(right);
  return Commutator(std::move(node));
}

bool Commutator::is_generator() const noexcept { return node_->index != 0; }
std::uint32_t Commutator::generator_index() const noexcept { return node_->index; }
const Commutator& Commutator::left() const noexcept { return *node_->left; }
const Commutator& Commutator::right() const noexcept { return *node_->right; }
std::uint64_t Commutator::weight() const noexcept { return node_->weight; }
const std::vector<std::uint32_t>& Commutator::occurrence() const noexcept { return node_->occurrence; }

bool Commutator::occurs(std::uint32_t index) const noexcept {
  return std::binary_search(node_->occurrence.begin(), node_->occurrence.end(), index);
}

bool operator==(const Commutator& a, const Commutator& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.is_generator() || b.is_generator()) {
    return a.is_generator() && b.is_generator() && a.generator_index() == b.generator_index();
  }
  return a.weight() == b.weight() && a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering compare(const Commutator& a, const Commutator& b) noexcept {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (a.is_generator()) return a.generator_index() <=> b.generator_index();
  if (auto c = compare(a.left(), b.left()); c != 0) return c;
  return compare(a.right(), b.right());
}

bool is_basic(const Commutator& c) {
  if (c.is_generator()) return true;
  const Commutator& u = c.left();
  const Commutator& v = c.right();
  if (!is_basic(u) || !is_basic(v)) return false;
  if (compare(u, v) <= 0) return false;
  if (!u.is_generator() && compare(v, u.right()) < 0) return false;
  return true;
}

std::optional<BasicCommutator> BasicCommutator::make(Commutator c) {
  if (!is_basic(c)) return std::nullopt;
  return BasicCommutator(std::move(c));
}

BasicCommutator BasicCommutator::from(Commutator c) {
  if (!is_basic(c)) throw DomainError("not a basic commutator: " + to_string(c));
  return BasicCommutator(std::move(c));
}

std::string to_string(const Commutator& c) {
  if (c.is_generator()) return "x" + std::to_string(c.generator_index());
  return "[" + to_string(c.left()) + "," + to_string(c.right()) + "]";
}

namespace {

class CommutatorParser {
 public:
  explicit CommutatorParser(std::string_view text) : text_(text) {}

  Commutator parse() {
    Commutator c = term();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters in commutator", pos_);
    return c;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) {
      throw ParseError(std::string("expected '") + ch + "' in commutator", pos_);
    }
    ++pos_;
  }

  Commutator term() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of commutator", pos_);
    if (text_[pos_] == '[') {
      ++pos_;
      Commutator left = term();
      expect(',');
      Commutator right = term();
      expect(']');
      return Commutator::bracket(std::move(left), std::move(right));
    }
    if (text_[pos_] != 'x') throw ParseError("expected 'x' or '[' in commutator", pos_);
    ++pos_;
    const std::size_t start = pos_;
    std::uint64_t index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (index > UINT32_MAX) throw ParseError("generator index too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected generator index", pos_);
    if (index == 0) throw ParseError("generator indices are 1-based", start);
    return Commutator::generator(static_cast<std::uint32_t>(index));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Commutator parse_commutator(std::string_view text) { return CommutatorParser(text).parse(); }

HallBasis::HallBasis(std::uint32_t generators, std::uint64_t max_weight) : generators_(generators) {
  if (max_weight == 0) throw DomainError("HallBasis: weight must be >= 1");
  Count total = 0;
  for (std::uint64_t w = 1; w <= max_weight; ++w) total += witt(w, generators);
  require_within_cap(CapKind::HallCommutators, total);

  by_weight_.reserve(max_weight);
  offset_.reserve(max_weight);

  std::vector<BasicCommutator> ones;
  ones.reserve(generators);
  for (std::uint32_t i = 1; i <= generators; ++i) ones.push_back(BasicCommutator::from(Commutator::generator(i)));
  offset_.push_back(0);
  by_weight_.push_back(std::move(ones));

  // For each bracket, position of its right child, so that the condition
  // v >= t of a candidate [[s,t], v] is a rank comparison.
  std::vector<std::vector<std::size_t>> right_rank(1, std::vector<std::size_t>(generators, 0));

  for (std::uint64_t w = 2; w <= max_weight; ++w) {
    std::vector<BasicCommutator> level;
    std::vector<std::size_t> level_right;
    for (std::uint64_t wl = (w + 1) / 2; wl < w; ++wl) {
      const std::uint64_t wr = w - wl;
      const auto& lefts = by_weight_[wl - 1];
      const auto& rights = by_weight_[wr - 1];
      for (std::size_t li = 0; li < lefts.size(); ++li) {
        const std::size_t lrank = offset_[wl - 1] + li;
        for (std::size_t ri = 0; ri < rights.size(); ++ri) {
          const std::size_t rrank = offset_[wr - 1] + ri;
          if (lrank <= rrank) break;
          if (wl > 1 && rrank < right_rank[wl - 1][li]) continue;
          level.push_back(BasicCommutator(Commutator::bracket(lefts[li].tree(), rights[ri].tree())));
          level_right.push_back(rrank);
        }
      }
    }
    offset_.push_back(offset_.back() + by_weight_.back().size());
    by_weight_.push_back(std::move(level));
    right_rank.push_back(std::move(level_right));
  }
}

std::span<const BasicCommutator> HallBasis::of_weight(std::uint64_t weight) const {
  if (weight == 0 || weight > by_weight_.size()) throw DomainError("HallBasis: weight out of range");
  return by_weight_[weight - 1];
}

std::size_t HallBasis::rank(std::uint64_t weight, std::size_t i) const {
  if (weight == 0 || weight > by_weight_.size()) throw DomainError("HallBasis: weight out of range");
  return offset_[weight - 1] + i;
}

std::vector<BasicCommutator> enumerate_basic(std::uint32_t d, std::uint64_t w) {
  HallBasis basis(d, w);
  auto level = basis.of_weight(w);
  return {level.begin(), level.end()};
}

std::vector<CommutatorPair> build_pairs(const VarietyParams& params, std::uint32_t d) {
  const std::uint64_t wb = params.c1() + 1;
  const std::uint64_t wa = params.c2() + 1;
  require_within_cap(CapKind::HallCommutators, witt(wb, d) * witt(wa, d));
  HallBasis basis(d, wb);
  auto betas = basis.of_weight(wb);
  auto alphas = basis.of_weight(wa);

  std::vector<CommutatorPair> pairs;
  for (std::size_t bi = 0; bi < betas.size(); ++bi) {
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
      if (basis.rank(wb, bi) <= basis.rank(wa, ai)) break;
      pairs.push_back({betas[bi], alphas[ai]});
    }
  }
  return pairs;
}

bool pairs_are_basic(const VarietyParams& params, std::uint32_t d) {
  const auto pairs = build_pairs(params, d);
  return std::all_of(pairs.begin(), pairs.end(), [](const CommutatorPair& p) { return is_basic(p.bracket()); });
}

namespace {

void require_block_index(std::uint64_t j) {
  if (j == 0) throw DomainError("torsion block index j must be >= 1");
}

}  // namespace

Count torsion_block_size(const VarietyParams& params, std::uint64_t k, std::uint64_t j) {
  require_block_index(j);
  const Count hi = k + j;
  const Count lo = k + j - 1;
  const std::uint64_t wb = params.c1() + 1;
  if (params.equal_classes()) return witt(2, witt(wb, hi)) - witt(2, witt(wb, lo));
  const std::uint64_t wa = params.c2() + 1;
  return witt(wb, hi) * witt(wa, hi) - witt(wb, lo) * witt(wa, lo);
}

TorsionBlockCounts torsion_block_split(const VarietyParams& params, std::uint64_t k, std::uint64_t j) {
  require_block_index(j);
  if (params.equal_classes()) {
    throw UnsupportedVarietyError("the beta/alpha split formulas apply only when c1 > c2");
  }
  const Count hi = k + j;
  const Count lo = k + j - 1;
  const Count beta_hi = witt(params.c1() + 1, hi);
  const Count beta_lo = witt(params.c1() + 1, lo);
  const Count alpha_hi = witt(params.c2() + 1, hi);
  const Count alpha_lo = witt(params.c2() + 1, lo);
  TorsionBlockCounts out;
  out.only_beta = (beta_hi - beta_lo) * alpha_lo;
  out.only_alpha = beta_lo * (alpha_hi - alpha_lo);
  out.both = (beta_hi - beta_lo) * (alpha_hi - alpha_lo);
  out.total = out.only_beta + out.only_alpha + out.both;
  return out;
}

TorsionBlockCounts enumerate_torsion_block(const VarietyParams& params, std::uint64_t k, std::uint64_t j,
                                           std::uint64_t t) {
  require_block_index(j);
  if (j > t) throw DomainError("torsion block index j must not exceed t");
  if (k + t > UINT32_MAX) throw ResourceLimitError("generator count exceeds 2^32");
  const auto target = static_cast<std::uint32_t>(k + j);

  TorsionBlockCounts out;
  for (const CommutatorPair& p : build_pairs(params, static_cast<std::uint32_t>(k + t))) {
    const bool in_beta = p.beta.occurs(target);
    const bool in_alpha = p.alpha.occurs(target);
    if (!in_beta && !in_alpha) continue;
    ++out.any_occurrence;
    const std::uint32_t highest = std::max(p.beta.tree().highest_generator(), p.alpha.tree().highest_generator());
    if (highest != target) continue;
    ++out.total;
    if (in_beta && in_alpha) {
      ++out.both;
    } else if (in_beta) {
      ++out.only_beta;
    } else {
      ++out.only_alpha;
    }
  }
  return out;
}

}  // namespace outercomm
