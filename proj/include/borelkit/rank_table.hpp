#ifndef BORELKIT_RANK_TABLE_HPP
#define BORELKIT_RANK_TABLE_HPP

#include <string>
#include <vector>

#include "borelkit/dense_matrix.hpp"
#include "borelkit/involution.hpp"

namespace borelkit {

/// r(i,j) = rank of the lower-left window (rows i..N, columns 1..j) for
/// 1 <= i < j <= N. Lookups outside that range return 0, which is the value
/// every strictly upper triangular matrix has there.
class RankTable {
 public:
  explicit RankTable(int n);

  int size() const { return n_; }
  int at(int i, int j) const;
  void set(int i, int j, int value);

  /// Entrywise comparison; both tables must have the same size.
  bool leq(const RankTable& other) const;

  /// Empty when the table satisfies the bound, monotonicity and unit-step
  /// invariants.
  std::vector<std::string> invariant_violations() const;

  std::string str() const;

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  int n_;
  std::vector<int> values_;
};

/// Counts ones in each window; equals the rank because the pattern is a
/// partial permutation.
RankTable rank_table(const PartialPermutationPattern& pattern);
RankTable rank_table(const Involution& sigma);

/// Exact rank of every lower-left window of a square matrix.
template <class T>
RankTable rank_table(const DenseMatrix<T>& m) {
  if (m.rows() != m.cols()) throw InputError("rank_table: matrix must be square");
  const int n = static_cast<int>(m.rows());
  RankTable table(n);
  std::vector<std::size_t> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j;
  for (int i = 2; i <= n; ++i) {
    std::vector<std::size_t> rows;
    for (int k = i; k <= n; ++k) rows.push_back(k - 1);
    auto pivots = fraction_free_pivots(m.submatrix(rows, cols));
    for (int j = i + 1; j <= n; ++j) {
      int count = 0;
      for (auto p : pivots)
        if (static_cast<int>(p) < j) ++count;
      table.set(i, j, count);
    }
  }
  // Row i = 1 covers the whole matrix.
  auto pivots = fraction_free_pivots(m);
  for (int j = 2; j <= n; ++j) {
    int count = 0;
    for (auto p : pivots)
      if (static_cast<int>(p) < j) ++count;
    table.set(1, j, count);
  }
  return table;
}

/// Inverse of rank_table on patterns, by inclusion-exclusion on windows.
/// Throws InputError("not a pattern rank table") when no pattern matches.
PartialPermutationPattern pattern_from_rank_table(const RankTable& table);

}  // namespace borelkit

#endif  // BORELKIT_RANK_TABLE_HPP
