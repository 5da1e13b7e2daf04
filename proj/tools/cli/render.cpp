#include "cli/cli.hpp"

#include <cstdint>
#include <limits>

namespace outercomm::cli {

nlohmann::ordered_json integer_json(const Integer& value) {
  if (auto small = to_u64(value)) return *small;
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) return value.convert_to<std::int64_t>();
  return value.str();
}

nlohmann::ordered_json group_json(const FgAbelianGroup& g) {
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  for (const auto& n : g.invariant_factors()) torsion.push_back(integer_json(n));
  return {{"rank", integer_json(g.rank())}, {"torsion", std::move(torsion)}};
}

nlohmann::ordered_json element_json(const GroupElement& x) {
  nlohmann::ordered_json free = nlohmann::ordered_json::array();
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  for (const auto& c : x.free_coords()) free.push_back(integer_json(c));
  for (const auto& c : x.torsion_coords()) torsion.push_back(integer_json(c));
  return {{"free", std::move(free)}, {"torsion", std::move(torsion)}};
}

}  // namespace outercomm::cli
