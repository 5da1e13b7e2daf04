#include <doctest.h>

#include "outercomm/arith.hpp"
#include "outercomm/corpus.hpp"
#include "outercomm/error.hpp"
#include "outercomm/hall.hpp"
#include "outercomm/multiplier.hpp"

#include <random>

using namespace outercomm;

namespace {

FgAbelianGroup torsion_group(std::vector<Integer> factors) { return FgAbelianGroup::from_factors(0, factors); }

std::vector<VarietyParams> all_params(std::uint32_t max_c1) {
  std::vector<VarietyParams> out;
  for (std::uint32_t c1 = 1; c1 <= max_c1; ++c1) {
    for (std::uint32_t c2 = (c1 + 1) / 2; c2 <= c1; ++c2) {
      if (c2 >= 1) out.emplace_back(c1, c2);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("multiplier") {
  TEST_CASE("pair_count examples") {
    CHECK(pair_count(VarietyParams(2, 1), 2) == 2);
    CHECK(pair_count(VarietyParams(1, 1), 2) == 0);
    CHECK(pair_count(VarietyParams(1, 1), 3) == 3);
    CHECK(pair_count(VarietyParams(3, 2), 0) == 0);
    CHECK(pair_count(VarietyParams(2, 2), 2) == 1);
  }

  TEST_CASE("pair_count matches the explicit pair set") {
    for (const auto& p : all_params(4)) {
      for (std::uint32_t d = 0; d <= 3; ++d) {
        CAPTURE(p.label());
        CAPTURE(d);
        CHECK(pair_count(p, d) == build_pairs(p, d).size());
      }
    }
  }

  TEST_CASE("b is non-decreasing in i") {
    for (const auto& p : all_params(6)) {
      for (std::uint64_t i = 0; i < 30; ++i) CHECK(pair_count(p, i) <= pair_count(p, i + 1));
    }
  }

  TEST_CASE("baer_invariant examples") {
    const VarietyParams p21(2, 1);
    const VarietyParams p11(1, 1);
    CHECK(baer_invariant(torsion_group({4, 2}), p21) == torsion_group({2, 2}));
    CHECK(baer_invariant(torsion_group({12, 6}), p11).is_trivial());
    CHECK(baer_invariant(FgAbelianGroup::from_factors(2, {}), p11).is_trivial());
    CHECK(baer_invariant(FgAbelianGroup::from_factors(3, {}), p11) == FgAbelianGroup::from_factors(3, {}));
    CHECK(baer_invariant(FgAbelianGroup{}, p21).is_trivial());
    CHECK(baer_invariant(torsion_group({7}), VarietyParams(4, 3)).is_trivial());
    // Z + Z_2 with (1,1): b_1 = 0, b_2 = 0.
    CHECK(baer_invariant(FgAbelianGroup::from_factors(1, {2}), p11).is_trivial());
    // Z_6^3 with (1,1): b = 0, 0, 0, 3.
    CHECK(baer_invariant(torsion_group({6, 6, 6}), p11) == torsion_group({6, 6, 6}));
  }

  TEST_CASE("sizes") {
    const VarietyParams p21(2, 1);
    CHECK(baer_invariant_size(torsion_group({2, 2}), p21).finite == Count(4));
    CHECK(baer_invariant_size(torsion_group({9}), p21).finite == Count(1));
    CHECK(baer_invariant_size(FgAbelianGroup::from_factors(2, {}), p21).is_infinite());
    CHECK(group_size(FgAbelianGroup{}).finite == Count(1));
  }

  TEST_CASE("multiplier exponents and torsion blocks") {
    for (const auto& p : all_params(3)) {
      for (std::uint32_t k = 0; k <= 2; ++k) {
        for (std::uint32_t t = 1; k + t <= 3; ++t) {
          std::vector<Integer> f(t, 2);
          const auto g = FgAbelianGroup::from_factors(k, f);
          const auto b = multiplier_exponents(g, p);
          REQUIRE(b.size() == t + 1);
          CHECK(b.front() == build_pairs(p, k).size());
          for (std::uint32_t j = 1; j <= t; ++j) {
            CAPTURE(p.label());
            CAPTURE(k);
            CAPTURE(j);
            CHECK(b[j] - b[j - 1] == enumerate_torsion_block(p, k, j, t).total);
            CHECK(b[j] - b[j - 1] == torsion_block_size(p, k, j));
          }
        }
      }
    }
  }

  TEST_CASE("free rank of the multiplier counts pairs on k generators") {
    for (const auto& p : all_params(4)) {
      for (std::uint32_t k = 0; k <= 3; ++k) {
        const auto m = baer_invariant(FgAbelianGroup::from_factors(k, {6, 3}), p);
        CHECK(m.rank() == build_pairs(p, k).size());
      }
    }
  }

  TEST_CASE("the multiplier of a quotient by a cyclic subgroup embeds in the multiplier") {
    const std::vector<VarietyParams> ps{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}};
    for (const auto& g : finite_groups_up_to(32)) {
      for (const auto& p : ps) {
        const Count m = *baer_invariant_size(g, p).finite;
        for (const auto& x : elements(g)) {
          const auto q = baer_invariant(quotient_by_cyclic(g, x), p);
          CHECK(embeds_as_subgroup(q, baer_invariant(g, p)));
          CHECK(m % *group_size(q).finite == 0);
        }
      }
    }
  }

  TEST_CASE("huge ranks stay exact") {
    const Count k = Count(1) << 100;
    const auto g = FgAbelianGroup::from_runs(k, {{6, Count(1) << 80}});
    const VarietyParams p(2, 1);
    const auto m = baer_invariant(g, p);
    CHECK(m.rank() == pair_count(p, k));
    CHECK(m.runs().size() == 1);
    CHECK(m.runs().front().modulus == 6);
    CHECK(m.runs().front().multiplicity == pair_count(p, k + (Count(1) << 80)) - pair_count(p, k));
    CHECK(baer_invariant_size(g, p).is_infinite());
  }

  TEST_CASE("size refuses past the bit cap") {
    const auto g = FgAbelianGroup::from_runs(0, {{Integer(1) << 64, Count(1) << 30}});
    CHECK_THROWS_AS(baer_invariant_size(g, VarietyParams(2, 1)), ResourceLimitError);
  }

  TEST_CASE("large chains expand only within the cap") {
    const auto g = FgAbelianGroup::from_runs(0, {{2, Count(1) << 40}});
    CHECK_THROWS_AS(multiplier_exponents(g, VarietyParams(2, 1)), ResourceLimitError);
    CHECK_NOTHROW(baer_invariant(g, VarietyParams(2, 1)));
  }
}
