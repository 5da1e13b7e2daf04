#pragma once

#include "outercomm/integer.hpp"

#include <cstdint>

namespace outercomm {

/// Moebius function. Throws DomainError for m == 0.
int moebius(std::uint64_t m);

/// Witt's necklace count chi_n(d) = (1/n) sum_{m | n} mu(m) d^(n/m): the number
/// of basic commutators of weight n on d generators.
///
/// The divisor sum is checked for exact divisibility by n; a remainder throws
/// InternalError. n == 0 throws DomainError, as does a negative d.
Count witt(std::uint64_t n, const Count& d);
Count witt(std::uint64_t n, std::uint64_t d);

/// The raw divisor sum sum_{m | n} mu(m) d^(n/m), before division by n.
Integer witt_divisor_sum(std::uint64_t n, const Count& d);

/// Number of Lyndon words of length n over a d-letter alphabet, counted by
/// explicit generation (Duval's successor scheme). Independent of witt().
///
/// Refuses with ResourceLimitError when n * d^n exceeds the Lyndon cap.
Count count_lyndon(std::uint64_t n, std::uint64_t d);

}  // namespace outercomm
