#include "combicheck/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace combicheck {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_permutation(const Permutation& w) {
  const auto n = static_cast<std::size_t>(w.size());
  IntMatrix m(n, n);
  for (int i = 1; i <= w.size(); ++i) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(w(i) - 1)) = 1;
  return m;
}

IntMatrix IntMatrix::submatrix(std::size_t row_begin, std::size_t row_end, std::size_t col_begin,
                               std::size_t col_end) const {
  IntMatrix s(row_end - row_begin, col_end - col_begin);
  for (std::size_t i = row_begin; i < row_end; ++i) {
    for (std::size_t j = col_begin; j < col_end; ++j) s(i - row_begin, j - col_begin) = (*this)(i, j);
  }
  return s;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool IntMatrix::is_permutation_matrix() const {
  if (rows_ != cols_) return false;
  std::vector<int> col_count(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigInt& v = (*this)(i, j);
      if (v == 1) {
        ++ones;
        ++col_count[j];
      } else if (v != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (int c : col_count) {
    if (c != 1) return false;
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += " ";
      out += (*this)(i, j).str();
    }
    out += "]\n";
  }
  return out;
}

std::size_t int_matrix_rank(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const BigInt p = m(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        // Bareiss step: the division by the previous pivot is exact.
        m(i, j) = (p * m(i, j) - f * m(rank, j)) / prev_pivot;
      }
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

Permutation permutation_of_matrix(const IntMatrix& m) {
  if (!m.is_permutation_matrix()) throw std::invalid_argument("not a permutation matrix");
  std::vector<int> w(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1) w[i] = static_cast<int>(j) + 1;
    }
  }
  return Permutation(std::move(w));
}

}  // namespace combicheck
