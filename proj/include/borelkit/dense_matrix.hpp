#ifndef BORELKIT_DENSE_MATRIX_HPP
#define BORELKIT_DENSE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "borelkit/errors.hpp"
#include "borelkit/scalar.hpp"

namespace borelkit {

/// Row-major dense matrix over an exact ring. Indices are 0-based here;
/// the 1-based convention lives in the callers.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    DenseMatrix out(row_ids.size(), col_ids.size(), data_.front());
    for (std::size_t a = 0; a < row_ids.size(); ++a)
      for (std::size_t b = 0; b < col_ids.size(); ++b) out(a, b) = (*this)(row_ids[a], col_ids[b]);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: dimension mismatch");
  T zero = a(0, 0) - a(0, 0);
  DenseMatrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
    }
  return out;
}

/// Fraction-free (Bareiss) row echelon reduction over an integral domain,
/// processing columns left to right. Returns the pivot columns; the rank of
/// the leading j columns is the number of pivots below j. Every division
/// performed is exact.
template <class T>
std::vector<std::size_t> fraction_free_pivots(DenseMatrix<T> a) {
  std::vector<std::size_t> pivots;
  if (a.rows() == 0 || a.cols() == 0) return pivots;
  T prev = unit_like(a(0, 0));
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    const T& pivot = a(row, col);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      const T factor = a(i, col);
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        T num = pivot * a(i, j) - factor * a(row, j);
        a(i, j) = is_zero(num) ? num : exact_div(num, prev);
      }
      a(i, col) = factor - factor;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t exact_rank(const DenseMatrix<T>& a) {
  return fraction_free_pivots(a).size();
}

/// Determinant by fraction-free elimination.
template <class T>
T determinant_bareiss(DenseMatrix<T> a) {
  if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw InputError("determinant of empty matrix");
  T zero = a(0, 0) - a(0, 0);
  T prev = unit_like(a(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) return zero;
    if (p != k) {
      a.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = is_zero(num) ? num : exact_div(num, prev);
      }
      a(i, k) = zero;
    }
    prev = a(k, k);
  }
  return negate ? zero - a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Determinant by Laplace expansion along the first row.
template <class T>
T determinant_cofactor(const DenseMatrix<T>& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw InputError("determinant of empty matrix");
  if (n == 1) return a(0, 0);
  T total = a(0, 0) - a(0, 0);
  std::vector<std::size_t> rest_rows;
  for (std::size_t i = 1; i < n; ++i) rest_rows.push_back(i);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(a(0, c))) continue;
    std::vector<std::size_t> rest_cols;
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) rest_cols.push_back(j);
    T term = a(0, c) * determinant_cofactor(a.submatrix(rest_rows, rest_cols));
    total = (c % 2 == 0) ? T(total + term) : T(total - term);
  }
  return total;
}

}  // namespace borelkit

#endif  // BORELKIT_DENSE_MATRIX_HPP
