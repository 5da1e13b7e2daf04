#include "outercomm/limits.hpp"

#include "outercomm/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace outercomm {

std::uint64_t default_cap(CapKind kind) noexcept {
  switch (kind) {
    case CapKind::LyndonStrings:
      return std::uint64_t{1} << 24;
    case CapKind::HallCommutators:
      return 1'000'000;
    case CapKind::GroupElements:
      return std::uint64_t{1} << 16;
  }
  return 0;
}

std::uint64_t enumeration_cap(CapKind kind) {
  const char* env = std::getenv("OUTERCOMM_ENUM_CAP");
  if (env == nullptr || *env == '\0') return default_cap(kind);
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError(std::string("OUTERCOMM_ENUM_CAP is not a non-negative integer: '") + env + "'");
  }
  return value;
}

std::string_view cap_name(CapKind kind) noexcept {
  switch (kind) {
    case CapKind::LyndonStrings:
      return "Lyndon enumeration cap (n*d^n strings)";
    case CapKind::HallCommutators:
      return "basic-commutator enumeration cap";
    case CapKind::GroupElements:
      return "group element enumeration cap (|G|)";
  }
  return "enumeration cap";
}

void require_within_cap(CapKind kind, const Integer& requested) {
  const std::uint64_t cap = enumeration_cap(kind);
  if (requested > cap) {
    throw ResourceLimitError(std::string(cap_name(kind)) + " exceeded: requested " + requested.str() +
                             ", cap " + std::to_string(cap) + " (override with OUTERCOMM_ENUM_CAP)");
  }
}

}  // namespace outercomm
