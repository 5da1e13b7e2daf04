#pragma once

#include <cstdint>
#include <string>

namespace outercomm {

/// Class pair (c1, c2) of the outer commutator variety [N_c1, N_c2].
///
/// Construction enforces 1 <= c2 <= c1 <= 2*c2, the range in which the
/// multiplier formula holds; anything else throws
/// UnsupportedVarietyError.
class VarietyParams {
 public:
  VarietyParams(std::uint32_t c1, std::uint32_t c2);

  std::uint32_t c1() const noexcept { return c1_; }
  std::uint32_t c2() const noexcept { return c2_; }

  /// c1 == c2: pairs are unordered choices among one weight class.
  bool equal_classes() const noexcept { return c1_ == c2_; }

  /// (1, 1), i.e. the metabelian variety.
  bool is_metabelian() const noexcept { return c1_ == 1 && c2_ == 1; }

  /// "[N_c1,N_c2]"
  std::string label() const;

  friend bool operator==(const VarietyParams&, const VarietyParams&) = default;

 private:
  std::uint32_t c1_;
  std::uint32_t c2_;
};

/// True iff (c1, c2) would construct.
bool valid_variety(std::uint32_t c1, std::uint32_t c2) noexcept;

/// Message naming the accepted range; shared by every rejection site.
std::string variety_range_message(std::uint32_t c1, std::uint32_t c2);

}  // namespace outercomm
