#pragma once

#include "outercomm/integer.hpp"

#include <cstddef>
#include <vector>

namespace outercomm {

/// Dense rectangular matrix of exact integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Throws DomainError when the rows are ragged.
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntegerMatrix diagonal(const std::vector<Integer>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithDiagnostics {
  std::size_t rank = 0;        ///< number of nonzero diagonal entries
  std::size_t row_ops = 0;     ///< elementary row operations (swaps included)
  std::size_t col_ops = 0;     ///< elementary column operations (swaps included)
  std::size_t pivot_steps = 0; ///< pivot selections
};

struct SmithResult {
  /// Same shape as the input; d_1 | d_2 | ... | d_r on the diagonal, zeros elsewhere.
  IntegerMatrix diagonal;
  SmithDiagnostics diagnostics;

  /// The nonzero diagonal entries d_1 | d_2 | ... | d_r (all positive).
  std::vector<Integer> elementary_divisors() const;
};

/// Smith normal form by unimodular row/column operations, pivoting on the
/// smallest nonzero absolute value. On square input the product of the
/// diagonal is checked against |det| (InternalError on mismatch).
SmithResult smith_normal_form(const IntegerMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws DomainError on non-square input.
Integer determinant(const IntegerMatrix& m);

}  // namespace outercomm
