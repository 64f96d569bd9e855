#ifndef BORELKIT_POLY_MATRIX_HPP
#define BORELKIT_POLY_MATRIX_HPP

#include <map>
#include <span>
#include <string>
#include <utility>

#include "borelkit/dense_matrix.hpp"
#include "borelkit/polynomial.hpp"
#include "borelkit/rank_table.hpp"

namespace borelkit {

/// Strictly upper triangular N x N matrix of polynomials. Indices are
/// 1-based; absent entries are zero.
class PolyMatrix {
 public:
  using Entries = std::map<std::pair<int, int>, Polynomial>;

  PolyMatrix(int n, int nvars);

  int size() const { return n_; }
  int nvars() const { return nvars_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Polynomial at(int i, int j) const;
  /// Requires 1 <= i < j <= N; storing zero erases the entry.
  void set(int i, int j, Polynomial p);

  PolyMatrix operator*(const PolyMatrix& other) const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  DenseMatrix<Polynomial> dense() const;
  DenseMatrix<Rational> evaluate(std::span<const Rational> point) const;
  DenseMatrix<ModP> evaluate(std::span<const ModP> point) const;

  PolyMatrix extended(int extra) const;
  std::string str(const VariableNames& names = {}) const;

 private:
  int n_;
  int nvars_;
  Entries entries_;
};

/// Determinant of the submatrix on the given 1-based rows and columns:
/// Laplace expansion up to 4x4, fraction-free elimination above.
Polynomial minor(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols);

/// Same, forcing one of the two algorithms (for cross-checking).
enum class MinorMethod { cofactor, elimination };
Polynomial minor(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols, MinorMethod method);

/// Rank over the fraction field of the polynomial ring.
int generic_rank(const PolyMatrix& m);

/// Rank table over the fraction field; each entry is the generic rank of the
/// corresponding lower-left window.
RankTable generic_rank_table(const PolyMatrix& m);

}  // namespace borelkit

#endif  // BORELKIT_POLY_MATRIX_HPP
