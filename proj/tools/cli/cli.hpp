#pragma once

#include "outercomm/capability.hpp"
#include "outercomm/groups.hpp"
#include "outercomm/integer.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace outercomm::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // sweep/selfcheck mismatch, or an internal consistency failure
  kUsage = 2,
  kUnsupportedVariety = 3,
  kResourceLimit = 4,
};

/// Parses a group literal such as "Z^2 x Z12 x Z6" or "Z_4 + Z_2" and
/// normalizes it. Terms are `Z`, `Z^k` (free part), `Z<n>` / `Z_<n>`
/// (cyclic), and `Z<n>^<m>` (m cyclic copies), separated by `x` or `+`.
/// Whitespace is ignored. Throws ParseError with the offending offset.
FgAbelianGroup parse_group(std::string_view text);

/// Parses the `--variety` argument: baer, nc:C, outer:C1,C2, s2.
/// outer:1,1 routes to the metabelian selector.
VarietySelector parse_selector(std::string_view text);

/// Parses a `;`-separated list of `c1,c2` pairs.
std::vector<VarietyParams> parse_params_list(std::string_view text);

/// Exact integer as a JSON number when it fits in 64 bits, otherwise as a
/// decimal string.
nlohmann::ordered_json integer_json(const Integer& value);
/// {"rank": k, "torsion": [n_1, ..., n_t]}
nlohmann::ordered_json group_json(const FgAbelianGroup& g);
/// {"free": [...], "torsion": [...]}
nlohmann::ordered_json element_json(const GroupElement& x);

struct RunResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command line (program name excluded). Output is all-or-nothing:
/// on failure `out` is empty and `err` carries the message.
RunResult run(const std::vector<std::string>& args);

/// The bundled invariant suite behind `selfcheck`; one "PASS"/"FAIL" line per
/// check is appended to `report`. Returns true when everything passed.
bool run_selfcheck(std::string& report);

}  // namespace outercomm::cli
