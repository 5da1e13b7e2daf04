#include "cli/cli.hpp"

#include "outercomm/arith.hpp"
#include "outercomm/capability.hpp"
#include "outercomm/corpus.hpp"
#include "outercomm/hall.hpp"
#include "outercomm/multiplier.hpp"

#include <functional>
#include <random>

namespace outercomm::cli {

namespace {

std::vector<VarietyParams> valid_params(std::uint32_t max_sum) {
  std::vector<VarietyParams> out;
  for (std::uint32_t c1 = 1; c1 < max_sum; ++c1) {
    for (std::uint32_t c2 = 1; c1 + c2 <= max_sum; ++c2) {
      if (valid_variety(c1, c2)) out.emplace_back(c1, c2);
    }
  }
  return out;
}

bool witt_matches_lyndon() {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (std::uint64_t d = 0; d <= 4; ++d) {
      if (witt(n, d) != count_lyndon(n, d)) return false;
    }
  }
  return true;
}

bool hall_counts() {
  for (std::uint32_t d = 0; d <= 3; ++d) {
    const HallBasis basis(d, 6);
    for (std::uint64_t w = 1; w <= 6; ++w) {
      const auto level = basis.of_weight(w);
      if (Count(level.size()) != witt(w, d)) return false;
      for (std::size_t i = 0; i < level.size(); ++i) {
        if (!is_basic(level[i].tree())) return false;
        if (i > 0 && compare(level[i - 1], level[i]) >= 0) return false;
      }
    }
  }
  return true;
}

bool pairs_basic() {
  for (const auto& p : valid_params(5)) {
    for (std::uint32_t d = 0; d <= 3; ++d) {
      if (!pairs_are_basic(p, d)) return false;
    }
  }
  return true;
}

bool blocks_match() {
  for (const auto& p : valid_params(5)) {
    for (std::uint64_t t = 1; t <= 4; ++t) {
      for (std::uint64_t k = 0; k + t <= 4; ++k) {
        Count telescoped = pair_count(p, k);
        for (std::uint64_t j = 1; j <= t; ++j) {
          const auto counted = enumerate_torsion_block(p, k, j, t);
          const Count closed = torsion_block_size(p, k, j);
          if (counted.total != closed) return false;
          if (counted.only_beta + counted.only_alpha + counted.both != counted.total) return false;
          if (!p.equal_classes()) {
            const auto split = torsion_block_split(p, k, j);
            if (split.only_beta != counted.only_beta || split.only_alpha != counted.only_alpha ||
                split.both != counted.both) {
              return false;
            }
          }
          telescoped += closed;
        }
        if (telescoped != pair_count(p, k + t)) return false;
      }
    }
  }
  return true;
}

bool oracle_matches_deciders() {
  auto groups = finite_groups_up_to(32);
  std::erase_if(groups, [](const FgAbelianGroup& g) { return g.is_trivial(); });
  const std::vector<VarietyParams> params = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}, {4, 3}};
  for (const auto& p : params) {
    for (const auto& g : groups) {
      if (oracle_capable(g, p).capable != decide(g, selector_for(p))) return false;
    }
  }
  return true;
}

bool metabelian_counterexample() {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    const auto g = FgAbelianGroup::from_factors(0, {Integer(n), Integer(n)});
    if (!is_capable(g) || is_s2_capable(g)) return false;
  }
  return true;
}

bool equivalence_on_samples() {
  std::mt19937_64 rng(20240611);
  const auto all = valid_params(8);
  std::vector<VarietyParams> outer;
  for (const auto& p : all) {
    if (!p.is_metabelian()) outer.push_back(p);
  }
  std::uniform_int_distribution<std::size_t> pick(0, outer.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto g = sample_group(rng);
    const std::vector<VarietyParams> samples = {outer[pick(rng)], outer[pick(rng)]};
    if (!check_capability_equivalence(g, samples).consistent) return false;
  }
  return true;
}

}  // namespace

bool run_selfcheck(std::string& report) {
  const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"witt formula equals Lyndon enumeration (n <= 8, d <= 4)", witt_matches_lyndon},
      {"basic commutator counts equal witt (d <= 3, w <= 6)", hall_counts},
      {"pairs [beta,alpha] are basic (c1 + c2 <= 5, d <= 3)", pairs_basic},
      {"torsion blocks: closed form equals enumeration, telescoping", blocks_match},
      {"oracle agrees with closed-form deciders (2 <= |G| <= 32)", oracle_matches_deciders},
      {"Z_n + Z_n capable but not S_2-capable (n <= 12)", metabelian_counterexample},
      {"capability characterizations agree on 200 sampled groups", equivalence_on_samples},
  };
  bool ok = true;
  for (const auto& [name, check] : checks) {
    bool passed = false;
    try {
      passed = check();
    } catch (const std::exception& e) {
      report += "ERROR " + name + ": " + e.what() + '\n';
      ok = false;
      continue;
    }
    report += std::string(passed ? "PASS " : "FAIL ") + name + '\n';
    ok = ok && passed;
  }
  report += ok ? "selfcheck: all checks passed\n" : "selfcheck: FAILED\n";
  return ok;
}

}  // namespace outercomm::cli
