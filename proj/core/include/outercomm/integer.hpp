#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace outercomm {

/// Exact signed integer of unbounded magnitude.
using Integer = boost::multiprecision::cpp_int;

/// Exact non-negative count. Same representation as Integer; every producer
/// guarantees value >= 0.
using Count = Integer;

inline std::string to_string(const Integer& value) { return value.str(); }

inline std::optional<std::uint64_t> to_u64(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value.convert_to<std::uint64_t>();
}

inline Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a) / gcd(a, b) * abs(b);
}

/// Mathematical modulus: result in [0, |m|).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

}  // namespace outercomm
