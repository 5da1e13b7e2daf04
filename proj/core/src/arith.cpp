#include "outercomm/arith.hpp"

#include "outercomm/error.hpp"
#include "outercomm/limits.hpp"

#include <vector>

namespace outercomm {

int moebius(std::uint64_t m) {
  if (m == 0) throw DomainError("moebius: argument must be >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

Integer witt_divisor_sum(std::uint64_t n, const Count& d) {
  if (n == 0) throw DomainError("witt: weight must be >= 1");
  if (d < 0) throw DomainError("witt: generator count must be non-negative");
  Integer sum = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    const int mu = moebius(m);
    if (mu == 0) continue;
    const Integer term = boost::multiprecision::pow(d, static_cast<unsigned>(n / m));
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Count witt(std::uint64_t n, const Count& d) {
  const Integer sum = witt_divisor_sum(n, d);
  Integer quotient;
  Integer remainder;
  boost::multiprecision::divide_qr(sum, Integer(n), quotient, remainder);
  if (remainder != 0) {
    throw InternalError("witt: divisor sum " + sum.str() + " not divisible by n = " + std::to_string(n));
  }
  return quotient;
}

Count witt(std::uint64_t n, std::uint64_t d) { return witt(n, Count(d)); }

Count count_lyndon(std::uint64_t n, std::uint64_t d) {
  if (n == 0) throw DomainError("count_lyndon: length must be >= 1");
  require_within_cap(CapKind::LyndonStrings,
                     Integer(n) * boost::multiprecision::pow(Integer(d), static_cast<unsigned>(n)));
  if (d == 0) return 0;

  // Generates every Lyndon word of length <= n in lexicographic order.
  Count count = 0;
  std::vector<std::uint64_t> word{0};
  while (!word.empty()) {
    if (word.size() == n) ++count;
    const std::size_t period = word.size();
    while (word.size() < n) word.push_back(word[word.size() - period]);
    while (!word.empty() && word.back() == d - 1) word.pop_back();
    if (!word.empty()) ++word.back();
  }
  return count;
}

}  // namespace outercomm
