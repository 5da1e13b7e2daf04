#include "outercomm/variety.hpp"

#include "outercomm/error.hpp"

namespace outercomm {

bool valid_variety(std::uint32_t c1, std::uint32_t c2) noexcept {
  return c2 >= 1 && c2 <= c1 && static_cast<std::uint64_t>(c1) <= 2 * static_cast<std::uint64_t>(c2);
}

std::string variety_range_message(std::uint32_t c1, std::uint32_t c2) {
  return "unsupported variety [N_" + std::to_string(c1) + ",N_" + std::to_string(c2) +
         "]: the multiplier formula requires 1 <= c2 <= c1 <= 2*c2";
}

VarietyParams::VarietyParams(std::uint32_t c1, std::uint32_t c2) : c1_(c1), c2_(c2) {
  if (!valid_variety(c1, c2)) throw UnsupportedVarietyError(variety_range_message(c1, c2));
}

std::string VarietyParams::label() const {
  return "[N_" + std::to_string(c1_) + ",N_" + std::to_string(c2_) + "]";
}

}  // namespace outercomm
