#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "combicheck/bipoly.hpp"
#include "combicheck/permutation.hpp"

namespace combicheck {

/// Dense rectangular matrix of arbitrary-precision integers. Indices are
/// 0-based in code; the 1-based (i, j) of the math is (i - 1, j - 1).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Entry (i, j) is 1 iff w(i) = j.
  static IntMatrix from_permutation(const Permutation& w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Rows [row_begin, row_end) and columns [col_begin, col_end).
  IntMatrix submatrix(std::size_t row_begin, std::size_t row_end, std::size_t col_begin, std::size_t col_end) const;

  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// One 1 per row and column, zeros elsewhere.
  bool is_permutation_matrix() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank over the rationals via fraction-free (Bareiss) elimination.
std::size_t int_matrix_rank(const IntMatrix& m);

/// If m is a permutation matrix returns w with m(i, w(i)) = 1.
Permutation permutation_of_matrix(const IntMatrix& m);

}  // namespace combicheck
