#include <doctest.h>

#include "outercomm/arith.hpp"
#include "outercomm/error.hpp"
#include "outercomm/hall.hpp"
#include "support/oracles.hpp"

#include <thread>

using namespace outercomm;

namespace {

Commutator c(std::string_view text) { return parse_commutator(text); }

std::vector<std::string> names(const std::vector<BasicCommutator>& v) {
  std::vector<std::string> out;
  for (const auto& b : v) out.push_back(to_string(b));
  return out;
}

std::vector<VarietyParams> params_up_to(std::uint32_t max_sum) {
  std::vector<VarietyParams> out;
  for (std::uint32_t c1 = 1; c1 < max_sum; ++c1) {
    for (std::uint32_t c2 = 1; c1 + c2 <= max_sum; ++c2) {
      if (valid_variety(c1, c2)) out.emplace_back(c1, c2);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("hall") {
  TEST_CASE("tree caches") {
    const auto t = c("[[x2,x1],x4]");
    CHECK(t.weight() == 3);
    CHECK(t.occurrence() == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(t.occurs(4));
    CHECK_FALSE(t.occurs(3));
    CHECK(t.highest_generator() == 4);
    CHECK(to_string(t) == "[[x2,x1],x4]");
    CHECK(parse_commutator(" [ [x2 , x1] ,x4 ] ") == t);
  }

  TEST_CASE("commutator parse errors") {
    CHECK_THROWS_AS(parse_commutator("[x1,x2"), ParseError);
    CHECK_THROWS_AS(parse_commutator("x0"), ParseError);
    CHECK_THROWS_AS(parse_commutator("y1"), ParseError);
    CHECK_THROWS_AS(parse_commutator("[x1,x2]x"), ParseError);
  }

  TEST_CASE("order: weight first, then lexicographic") {
    CHECK(compare(c("x1"), c("x2")) < 0);
    CHECK(compare(c("x9"), c("[x2,x1]")) < 0);
    CHECK(compare(c("[x2,x1]"), c("[x3,x1]")) < 0);
    CHECK(compare(c("[x3,x1]"), c("[x3,x2]")) < 0);
    CHECK(compare(c("[[x2,x1],x3]"), c("[[x2,x1],x3]")) == 0);
    // left child compared across weights: x3 < [x2,x1]
    CHECK(compare(c("[x3,[x2,x1]]"), c("[[x2,x1],x1]")) < 0);
  }

  TEST_CASE("is_basic examples") {
    CHECK(is_basic(c("[x2,x1]")));
    CHECK_FALSE(is_basic(c("[x1,x2]")));
    CHECK(is_basic(c("[[x2,x1],x1]")));
    CHECK_FALSE(is_basic(c("[x3,[x2,x1]]")));
    CHECK_FALSE(is_basic(c("[x1,x1]")));
    // [[x3,x2],x1]: right x1 < t = x2
    CHECK_FALSE(is_basic(c("[[x3,x2],x1]")));
    CHECK(is_basic(c("[[x3,x1],x2]")));
    CHECK(BasicCommutator::make(c("[x1,x2]")) == std::nullopt);
    CHECK_THROWS_AS(BasicCommutator::from(c("[x1,x2]")), DomainError);
  }

  TEST_CASE("enumerate_basic examples") {
    CHECK(names(enumerate_basic(2, 1)) == std::vector<std::string>{"x1", "x2"});
    CHECK(names(enumerate_basic(2, 2)) == std::vector<std::string>{"[x2,x1]"});
    CHECK(names(enumerate_basic(2, 3)) == std::vector<std::string>{"[[x2,x1],x1]", "[[x2,x1],x2]"});
    CHECK(enumerate_basic(0, 4).empty());
    CHECK_THROWS_AS(enumerate_basic(2, 0), DomainError);
  }

  TEST_CASE("enumeration equals exhaustive filter of all trees") {
    for (std::uint32_t d = 0; d <= 3; ++d) {
      for (std::uint64_t w = 1; w <= 6; ++w) {
        CAPTURE(d);
        CAPTURE(w);
        const auto filtered = oracle::basic_by_filter(d, w);
        const auto generated = enumerate_basic(d, w);
        REQUIRE(generated.size() == filtered.size());
        for (std::size_t i = 0; i < generated.size(); ++i) CHECK(generated[i].tree() == filtered[i]);
        CHECK(Count(generated.size()) == witt(w, d));
      }
    }
  }

  TEST_CASE("enumeration is strictly increasing") {
    const HallBasis basis(4, 6);
    for (std::uint64_t w = 1; w <= 6; ++w) {
      const auto level = basis.of_weight(w);
      for (std::size_t i = 1; i < level.size(); ++i) CHECK(compare(level[i - 1], level[i]) < 0);
    }
  }

  TEST_CASE("enumeration cap") {
    // sum of chi_w(10) for w <= 8 is about 1.4 * 10^7
    CHECK_THROWS_AS(HallBasis(10, 8), ResourceLimitError);
    CHECK_NOTHROW(HallBasis(3, 8));
  }

  TEST_CASE("build_pairs examples") {
    const auto pairs = build_pairs(VarietyParams(2, 1), 2);
    REQUIRE(pairs.size() == 2);
    CHECK(Count(pairs.size()) == witt(3, 2) * witt(2, 2));
    CHECK(to_string(pairs[0].beta) == "[[x2,x1],x1]");
    CHECK(to_string(pairs[0].alpha) == "[x2,x1]");
    CHECK(to_string(pairs[1].beta) == "[[x2,x1],x2]");
    CHECK(to_string(pairs[1].alpha) == "[x2,x1]");
    CHECK(build_pairs(VarietyParams(1, 1), 2).empty());
    CHECK(build_pairs(VarietyParams(2, 1), 0).empty());
  }

  TEST_CASE("build_pairs sizes match the product / choose-two counts") {
    for (const auto& p : params_up_to(6)) {
      for (std::uint32_t d = 0; d <= 3; ++d) {
        const Count size = build_pairs(p, d).size();
        const Count nb = witt(p.c1() + 1, d);
        const Count na = witt(p.c2() + 1, d);
        CHECK(size == (p.equal_classes() ? witt(2, nb) : nb * na));
      }
    }
  }

  TEST_CASE("build_pairs cap") {
    // chi_5(12) * chi_3(12) = 49764 * 572 > 10^6
    CHECK_THROWS_AS(build_pairs(VarietyParams(4, 2), 12), ResourceLimitError);
  }

  TEST_CASE("bracketed pairs are basic in the whole valid range") {
    CHECK(pairs_are_basic(VarietyParams(2, 1), 3));
    CHECK(pairs_are_basic(VarietyParams(2, 2), 2));
    CHECK(pairs_are_basic(VarietyParams(1, 1), 4));
    for (const auto& p : params_up_to(5)) {
      for (std::uint32_t d = 0; d <= 3; ++d) CHECK(pairs_are_basic(p, d));
    }
  }

  TEST_CASE("pairs stop being basic past c1 = 2*c2") {
    // (3,1) is outside the supported range; build A by hand on 3 generators, where
    // [[x3,x2],[x2,x1]] bracketed with [x2,x1] breaks the ordering rule.
    const HallBasis basis(3, 4);
    bool some_fail = false;
    for (const auto& beta : basis.of_weight(4)) {
      for (const auto& alpha : basis.of_weight(2)) {
        if (!is_basic(Commutator::bracket(beta.tree(), alpha.tree()))) some_fail = true;
      }
    }
    CHECK(some_fail);
  }

  TEST_CASE("torsion block closed-form examples") {
    CHECK(torsion_block_size(VarietyParams(2, 1), 0, 2) == 2);
    CHECK(torsion_block_size(VarietyParams(2, 1), 0, 1) == 0);
    // fixed by enumeration below
    CHECK(torsion_block_size(VarietyParams(1, 1), 1, 1) == 0);
    CHECK(enumerate_torsion_block(VarietyParams(1, 1), 1, 1, 1).total == 0);
    CHECK_THROWS_AS(torsion_block_size(VarietyParams(2, 1), 0, 0), DomainError);
  }

  TEST_CASE("torsion block enumeration examples") {
    const VarietyParams p(2, 1);
    const auto last = enumerate_torsion_block(p, 0, 2, 2);
    CHECK(last.total == 2);
    CHECK(last.any_occurrence == 2);

    // Both pairs on 2 generators contain x1, but x2 is higher in each, so
    // none of them has order n_1.
    const auto first = enumerate_torsion_block(p, 0, 1, 2);
    CHECK(first.any_occurrence == 2);
    CHECK(first.total == 0);

    const auto b11 = enumerate_torsion_block(p, 1, 1, 1);
    CHECK(b11.total == 2);
    CHECK(b11.only_beta == 0);
    CHECK(b11.only_alpha == 0);
    CHECK(b11.both == 2);
    const auto split = torsion_block_split(p, 1, 1);
    CHECK(split.only_beta == b11.only_beta);
    CHECK(split.only_alpha == b11.only_alpha);
    CHECK(split.both == b11.both);

    CHECK_THROWS_AS(enumerate_torsion_block(p, 0, 3, 2), DomainError);
    CHECK_THROWS_AS(torsion_block_split(VarietyParams(2, 2), 0, 1), UnsupportedVarietyError);
  }

  TEST_CASE("closed form equals enumeration; split is disjoint and exhaustive") {
    for (const auto& p : params_up_to(5)) {
      for (std::uint64_t t = 1; t <= 4; ++t) {
        for (std::uint64_t k = 0; k + t <= 4; ++k) {
          for (std::uint64_t j = 1; j <= t; ++j) {
            CAPTURE(p.label());
            CAPTURE(k);
            CAPTURE(j);
            CAPTURE(t);
            const auto counted = enumerate_torsion_block(p, k, j, t);
            CHECK(counted.total == torsion_block_size(p, k, j));
            CHECK(counted.only_beta + counted.only_alpha + counted.both == counted.total);
            CHECK(counted.any_occurrence >= counted.total);
            if (!p.equal_classes()) {
              const auto split = torsion_block_split(p, k, j);
              CHECK(split.only_beta == counted.only_beta);
              CHECK(split.only_alpha == counted.only_alpha);
              CHECK(split.both == counted.both);
              CHECK(split.total == torsion_block_size(p, k, j));
            }
          }
        }
      }
    }
  }

  TEST_CASE("concurrent enumeration yields identical results") {
    const auto reference = names(enumerate_basic(3, 5));
    std::vector<std::vector<std::string>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < results.size(); ++i) {
      workers.emplace_back([&results, i] { results[i] = names(enumerate_basic(3, 5)); });
    }
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == reference);
  }
}
