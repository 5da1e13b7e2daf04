#pragma once

#include "outercomm/integer.hpp"

#include <cstdint>
#include <string_view>

namespace outercomm {

/// Kinds of explicit enumeration the library performs. Closed-form paths are
/// never capped.
enum class CapKind {
  LyndonStrings,    ///< n * d^n strings visited by count_lyndon
  HallCommutators,  ///< basic commutators (or A-pairs) materialized at once
  GroupElements,    ///< |G| for element enumeration
};

/// Default caps: 2^24 Lyndon strings, 10^6 commutators, 2^16 group elements.
std::uint64_t default_cap(CapKind kind) noexcept;

/// Cap in force. The OUTERCOMM_ENUM_CAP environment variable, when set to a
/// non-negative integer, overrides every kind.
std::uint64_t enumeration_cap(CapKind kind);

std::string_view cap_name(CapKind kind) noexcept;

/// Throws ResourceLimitError naming the cap when `requested` exceeds it.
void require_within_cap(CapKind kind, const Integer& requested);

}  // namespace outercomm
