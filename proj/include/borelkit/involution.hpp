#ifndef BORELKIT_INVOLUTION_HPP
#define BORELKIT_INVOLUTION_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace borelkit {

/// A transposition (lo, hi) with 1 <= lo < hi.
struct Transposition {
  int lo = 0;
  int hi = 0;

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// A non-identity involution of {1..N}, stored as its disjoint transpositions
/// sorted by first coordinate.
class Involution {
 public:
  Involution(int n, std::vector<Transposition> pairs);

  /// Parses "(i1,j1)(i2,j2)..." with 1-based indices.
  static Involution parse(std::string_view text, int n);

  int size() const { return n_; }
  int rank() const { return static_cast<int>(pairs_.size()); }
  std::span<const Transposition> pairs() const { return pairs_; }

  /// sigma(k) for 1 <= k <= N.
  int image(int k) const;
  /// images()[k] = sigma(k); index 0 unused.
  std::vector<int> images() const;

  /// Left endpoints i_1 < ... < i_s and matching right endpoints j_1..j_s.
  std::vector<int> lefts() const;
  std::vector<int> rights() const;

  bool contains(Transposition t) const;

  /// Conjugate by the transposition (a, b).
  Involution conjugated(int a, int b) const;
  /// Drops one transposition; nullopt when that would leave the identity.
  std::optional<Involution> without(Transposition t) const;

  std::string str() const;

  friend bool operator==(const Involution&, const Involution&) = default;
  friend auto operator<=>(const Involution& a, const Involution& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.pairs_ <=> b.pairs_;
  }

 private:
  int n_;
  std::vector<Transposition> pairs_;
};

/// Strictly upper triangular square-zero 0/1 partial permutation matrix.
/// Positions are 1-based (row, column) pairs, kept sorted by row.
class PartialPermutationPattern {
 public:
  PartialPermutationPattern(int n, std::vector<Transposition> ones);

  int size() const { return n_; }
  int rank() const { return static_cast<int>(ones_.size()); }
  std::span<const Transposition> ones() const { return ones_; }
  bool at(int row, int col) const;

  friend bool operator==(const PartialPermutationPattern&,
                         const PartialPermutationPattern&) = default;

 private:
  int n_;
  std::vector<Transposition> ones_;
};

PartialPermutationPattern to_pattern(const Involution& sigma);
Involution to_involution(const PartialPermutationPattern& pattern);

/// Every non-identity involution of {1..n} (optionally of one rank) in
/// lexicographic order of the canonical transposition sequence.
std::vector<Involution> enumerate_involutions(int n, std::optional<int> rank = std::nullopt);

}  // namespace borelkit

#endif  // BORELKIT_INVOLUTION_HPP
