#include "cli/cli.hpp"

#include "outercomm/arith.hpp"
#include "outercomm/corpus.hpp"
#include "outercomm/error.hpp"
#include "outercomm/hall.hpp"
#include "outercomm/multiplier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace outercomm::cli {

namespace {

using json = nlohmann::ordered_json;

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, _] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << key << value << '\n';
}

std::string join(const std::vector<Count>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + values[i].str();
  return s;
}

std::string size_text(const MultiplierSize& size) { return size.is_infinite() ? "infinite" : size.finite->str(); }

json size_json(const MultiplierSize& size) {
  return size.is_infinite() ? json("infinite") : integer_json(*size.finite);
}

void cmd_witt(std::ostream& out, std::uint64_t weight, std::uint64_t generators) {
  out << witt(weight, generators).str() << '\n';
}

void cmd_hall(std::ostream& out, std::uint32_t generators, std::uint64_t max_weight, bool as_json) {
  const HallBasis basis(generators, max_weight);
  if (as_json) {
    json weights = json::array();
    for (std::uint64_t w = 1; w <= max_weight; ++w) {
      json list = json::array();
      for (const auto& c : basis.of_weight(w)) list.push_back(to_string(c));
      weights.push_back({{"weight", w}, {"count", list.size()}, {"commutators", std::move(list)}});
    }
    out << json{{"generators", generators}, {"max_weight", max_weight}, {"weights", std::move(weights)}}.dump(2)
        << '\n';
    return;
  }
  out << "weight  count  commutators\n";
  for (std::uint64_t w = 1; w <= max_weight; ++w) {
    const auto level = basis.of_weight(w);
    std::ostringstream line;
    line << std::left << std::setw(8) << w << std::setw(7) << level.size();
    for (std::size_t i = 0; i < level.size(); ++i) line << (i ? " " : "") << to_string(level[i]);
    std::string text = line.str();
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
}

void cmd_multiplier(std::ostream& out, const std::string& group_text, std::uint32_t c1, std::uint32_t c2,
                    bool as_json) {
  const FgAbelianGroup g = parse_group(group_text);
  const VarietyParams params(c1, c2);
  const FgAbelianGroup m = baer_invariant(g, params);
  const MultiplierSize size = group_size(m);
  const std::vector<Count> b = multiplier_exponents(g, params);
  if (as_json) {
    json exps = json::array();
    for (const auto& v : b) exps.push_back(integer_json(v));
    json doc = {{"input", group_json(g)},
                {"variety", {{"c1", c1}, {"c2", c2}}},
                {"multiplier", group_json(m)},
                {"size", size_json(size)},
                {"exponents_b", std::move(exps)}};
    out << doc.dump(2) << '\n';
    return;
  }
  print_rows(out, {{"group", to_string(g)},
                   {"variety", params.label()},
                   {"multiplier", to_string(m)},
                   {"size", size_text(size)},
                   {"exponents_b", join(b)}});
}

void cmd_capable(std::ostream& out, const std::string& group_text, const std::string& variety, bool oracle,
                 bool as_json) {
  const FgAbelianGroup g = parse_group(group_text);
  const VarietySelector selector = parse_selector(variety);
  const bool routed = std::holds_alternative<MetabelianSelector>(selector) && variety.find("outer:") != std::string::npos;

  bool capable = false;
  std::string method = routed ? "closed-form (metabelian route)" : "closed-form";
  std::optional<GroupElement> witness;
  if (oracle) {
    std::optional<VarietyParams> params;
    if (const auto* o = std::get_if<OuterSelector>(&selector)) params = o->params();
    if (std::holds_alternative<MetabelianSelector>(selector)) params = VarietyParams(1, 1);
    if (!params) {
      throw UnsupportedVarietyError("--oracle needs an outer-commutator variety (outer:C1,C2 or s2), got " +
                                    to_string(selector));
    }
    OracleVerdict verdict = oracle_capable(g, *params);
    capable = verdict.capable;
    witness = std::move(verdict.witness);
    method = "oracle";
  } else {
    capable = decide(g, selector);
  }

  if (as_json) {
    json doc = {{"group", group_json(g)},
                {"variety", to_string(selector)},
                {"capable", capable},
                {"method", method},
                {"witness", witness ? element_json(*witness) : json(nullptr)}};
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"group", to_string(g)}, {"variety", to_string(selector)}, {"capable", capable ? "yes" : "no"}, {"method", method}};
  if (witness) rows.emplace_back("witness", to_string(*witness));
  print_rows(out, rows);
}

// Oracle versus closed form on every nontrivial group of order <= max_order.
bool cmd_sweep(std::ostream& out, std::uint64_t max_order, const std::string& params_text, bool as_json) {
  const auto params_list = parse_params_list(params_text);
  auto groups = finite_groups_up_to(max_order);
  std::erase_if(groups, [](const FgAbelianGroup& g) { return g.is_trivial(); });

  bool ok = true;
  json results = json::array();
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& params : params_list) {
    const VarietySelector selector = selector_for(params);
    std::size_t capable_count = 0;
    std::vector<std::string> mismatches;
    for (const auto& g : groups) {
      const bool expected = decide(g, selector);
      const bool observed = oracle_capable(g, params).capable;
      if (observed) ++capable_count;
      if (expected != observed) mismatches.push_back(to_string(g));
    }
    ok = ok && mismatches.empty();
    results.push_back({{"c1", params.c1()},
                       {"c2", params.c2()},
                       {"decider", to_string(selector)},
                       {"checked", groups.size()},
                       {"capable", capable_count},
                       {"mismatches", mismatches}});
    std::string summary = std::to_string(groups.size()) + " groups, " + std::to_string(capable_count) +
                          " capable, " + std::to_string(mismatches.size()) + " mismatches";
    for (const auto& m : mismatches) summary += "\n  mismatch: " + m;
    rows.emplace_back(params.label(), summary);
  }
  if (as_json) {
    out << json{{"max_order", max_order}, {"groups", groups.size()}, {"results", std::move(results)}, {"ok", ok}}.dump(2)
        << '\n';
  } else {
    print_rows(out, rows);
    out << (ok ? "ok" : "MISMATCH") << '\n';
  }
  return ok;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Baer invariants and capability of finitely generated abelian groups", "outercomm"};
  app.require_subcommand(1);

  std::uint64_t weight = 0;
  std::uint64_t generators64 = 0;
  auto* witt_cmd = app.add_subcommand("witt", "Witt number chi_n(d)");
  witt_cmd->add_option("--weight", weight, "weight n >= 1")->required();
  witt_cmd->add_option("--generators", generators64, "generator count d >= 0")->required();

  std::uint32_t generators = 0;
  std::uint64_t max_weight = 0;
  bool as_json = false;
  auto* hall_cmd = app.add_subcommand("hall", "List basic commutators by weight");
  hall_cmd->add_option("--generators", generators, "generator count")->required();
  hall_cmd->add_option("--max-weight", max_weight, "largest weight")->required();
  hall_cmd->add_flag("--json", as_json, "JSON output");

  std::string group_text;
  std::uint32_t c1 = 0;
  std::uint32_t c2 = 0;
  auto* mult_cmd = app.add_subcommand("multiplier", "Baer invariant with respect to [N_c1, N_c2]");
  mult_cmd->add_option("--group", group_text, "group literal, e.g. \"Z^2 x Z12 x Z6\"")->required();
  mult_cmd->add_option("--c1", c1, "c1")->required();
  mult_cmd->add_option("--c2", c2, "c2")->required();
  mult_cmd->add_flag("--json", as_json, "JSON output");

  std::string variety;
  bool oracle = false;
  auto* cap_cmd = app.add_subcommand("capable", "Decide varietal capability");
  cap_cmd->add_option("--group", group_text, "group literal")->required();
  cap_cmd->add_option("--variety", variety, "baer | nc:C | outer:C1,C2 | s2")->required();
  cap_cmd->add_flag("--oracle", oracle, "use the brute-force quotient oracle (finite groups)");
  cap_cmd->add_flag("--json", as_json, "JSON output");

  std::uint64_t max_order = 0;
  std::string params_text;
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare oracle and closed-form deciders over small groups");
  sweep_cmd->add_option("--max-order", max_order, "largest group order")->required();
  sweep_cmd->add_option("--params", params_text, "pairs c1,c2 separated by ';'")->required();
  sweep_cmd->add_flag("--json", as_json, "JSON output");

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the bundled invariant suite");

  RunResult result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      result.exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
      result.out = out.str();
      result.err = err.str();
      return result;
    }

    if (witt_cmd->parsed()) {
      cmd_witt(out, weight, generators64);
    } else if (hall_cmd->parsed()) {
      cmd_hall(out, generators, max_weight, as_json);
    } else if (mult_cmd->parsed()) {
      cmd_multiplier(out, group_text, c1, c2, as_json);
    } else if (cap_cmd->parsed()) {
      cmd_capable(out, group_text, variety, oracle, as_json);
    } else if (sweep_cmd->parsed()) {
      if (!cmd_sweep(out, max_order, params_text, as_json)) result.exit_code = kCheckFailed;
    } else if (selfcheck_cmd->parsed()) {
      std::string report;
      if (!run_selfcheck(report)) result.exit_code = kCheckFailed;
      out << report;
    }
    result.out = out.str();
    return result;
  } catch (const ResourceLimitError& e) {
    result.exit_code = kResourceLimit;
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const UnsupportedVarietyError& e) {
    result.exit_code = kUnsupportedVariety;
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const UnsupportedInputError& e) {
    result.exit_code = kUnsupportedVariety;
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const Error& e) {
    result.exit_code = kUsage;
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const InternalError& e) {
    result.exit_code = kCheckFailed;
    result.err = std::string("internal error: ") + e.what() + '\n';
  }
  result.out.clear();
  return result;
}

}  // namespace outercomm::cli
