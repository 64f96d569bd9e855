#ifndef BORELKIT_CONSTRUCTIONS_HPP
#define BORELKIT_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borelkit/morphism.hpp"

namespace borelkit {

/// Built-in example families:
///   identity_block(n)  N = 2n, r = 1, x on the diagonal of the upper right block
///   ex2                N = 4, r = 2
///   ex3                N = 6, r = 2
///   row_family(n)      N = 2n, r = 2, n >= 2 (ex2 and ex3 at n = 2, 3)
///   koszul8            N = 8, r = 3
///   ex12               N = 12, r = 3
GradedMorphism make_example(std::string_view kind, std::optional<int> n = std::nullopt);

/// Kinds accepted by make_example, and whether each takes n.
struct ExampleKind {
  std::string name;
  bool parametric;
};
const std::vector<ExampleKind>& example_kinds();

GradedMorphism identity_block(int n);
GradedMorphism row_family(int n);
GradedMorphism koszul8();
GradedMorphism ex12();

/// Block sizes (l_1, ..., l_m); entries inside each diagonal block vanish.
struct BlockPattern {
  std::vector<int> sizes;
  int total() const;
  /// Parses "1,3,2" (also accepts "(1,3,2)").
  static BlockPattern parse(std::string_view text);
  std::string str() const;
};

bool block_pattern_check(const PolyMatrix& m, const BlockPattern& pat);
inline bool block_pattern_check(const GradedMorphism& psi, const BlockPattern& pat) {
  return block_pattern_check(psi.matrix(), pat);
}

/// Interleaves psi1 and psi2 on a 2m x 2m board. Square k has epsilon 1 when
/// k is odd and 2 when k is even and holds block (k+1)/2 of psi_epsilon;
/// squares with mismatched epsilon are zero. The weights are inferred unless
/// d is given.
GradedMorphism chessboard(const GradedMorphism& psi1, const BlockPattern& pat1, const GradedMorphism& psi2,
                          const BlockPattern& pat2, std::optional<std::vector<int>> d = std::nullopt);

}  // namespace borelkit

#endif  // BORELKIT_CONSTRUCTIONS_HPP
