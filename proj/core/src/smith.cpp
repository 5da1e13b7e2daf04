#include "outercomm/matrix.hpp"

#include "outercomm/error.hpp"

#include <algorithm>
#include <utility>

namespace outercomm {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("IntegerMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Integer>& entries) {
  IntegerMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::vector<Integer> SmithResult::elementary_divisors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n && diagonal(i, i) != 0; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

// Location of the smallest nonzero |entry| in the block a[s.., s..].
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntegerMatrix& a, std::size_t s) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = s; i < a.rows(); ++i) {
    for (std::size_t j = s; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = std::move(v);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  SmithDiagnostics diag;
  const std::size_t n = std::min(a.rows(), a.cols());

  std::size_t s = 0;
  for (; s < n; ++s) {
    for (;;) {
      auto pivot = smallest_entry(a, s);
      if (!pivot) goto done;
      ++diag.pivot_steps;
      if (pivot->first != s) {
        a.swap_rows(s, pivot->first);
        ++diag.row_ops;
      }
      if (pivot->second != s) {
        a.swap_cols(s, pivot->second);
        ++diag.col_ops;
      }
      const Integer p = a(s, s);

      bool residue = false;
      for (std::size_t i = s + 1; i < a.rows(); ++i) {
        if (a(i, s) == 0) continue;
        const Integer q = a(i, s) / p;
        for (std::size_t j = s; j < a.cols(); ++j) a(i, j) -= q * a(s, j);
        ++diag.row_ops;
        residue = residue || a(i, s) != 0;
      }
      for (std::size_t j = s + 1; j < a.cols(); ++j) {
        if (a(s, j) == 0) continue;
        const Integer q = a(s, j) / p;
        for (std::size_t i = s; i < a.rows(); ++i) a(i, j) -= q * a(i, s);
        ++diag.col_ops;
        residue = residue || a(s, j) != 0;
      }
      if (residue) continue;

      // Pivot isolated; enforce p | every remaining entry by folding an
      // offending row into row s.
      bool divides_all = true;
      for (std::size_t i = s + 1; i < a.rows() && divides_all; ++i) {
        for (std::size_t j = s + 1; j < a.cols(); ++j) {
          if (a(i, j) % p != 0) {
            for (std::size_t c = s; c < a.cols(); ++c) a(s, c) += a(i, c);
            ++diag.row_ops;
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (a(s, s) < 0) a(s, s) = -a(s, s);
  }
done:
  diag.rank = s;

  for (std::size_t i = 1; i < diag.rank; ++i) {
    if (a(i, i) % a(i - 1, i - 1) != 0) throw InternalError("smith_normal_form: divisibility chain broken");
  }
  if (m.rows() == m.cols()) {
    Integer product = 1;
    for (std::size_t i = 0; i < n; ++i) product *= a(i, i);
    if (product != abs(determinant(m))) throw InternalError("smith_normal_form: |det| not preserved");
  }
  return {std::move(a), diag};
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace outercomm
