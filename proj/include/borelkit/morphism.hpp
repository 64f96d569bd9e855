#ifndef BORELKIT_MORPHISM_HPP
#define BORELKIT_MORPHISM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "borelkit/involution.hpp"
#include "borelkit/poly_matrix.hpp"
#include "borelkit/rank_table.hpp"

namespace borelkit {

/// A candidate morphism from P^{r-1} into the square-zero matrices of weight
/// d: a strictly upper triangular polynomial matrix whose (i,j) entry is
/// homogeneous of degree m (d_i - d_j + 1).
class GradedMorphism {
 public:
  /// strict: every grading violation throws. report: grading violations are
  /// recorded and exposed through grading_violations(); structural problems
  /// (odd N, bad d, zero matrix) still throw.
  enum class Grading { strict, report };

  GradedMorphism(std::vector<int> d, int multiplier, PolyMatrix matrix, Grading mode = Grading::strict,
                 VariableNames names = {});

  int size() const { return matrix_.size(); }
  int half() const { return matrix_.size() / 2; }
  int nvars() const { return matrix_.nvars(); }
  int multiplier() const { return multiplier_; }
  const std::vector<int>& weights() const { return d_; }
  const PolyMatrix& matrix() const { return matrix_; }
  const VariableNames& names() const { return names_; }
  const std::vector<std::string>& grading_violations() const { return grading_violations_; }

  /// Degree that entry (i,j) must have: m (d_i - d_j + 1).
  int required_degree(int i, int j) const;

 private:
  std::vector<int> d_;
  int multiplier_;
  PolyMatrix matrix_;
  VariableNames names_;
  std::vector<std::string> grading_violations_;
};

/// Weights d solving deg(p_ij) = m (d_i - d_j + 1) on the support graph.
/// The component of index 1 is anchored at d_1 = 0; every other component
/// takes the largest offset that keeps d nonincreasing.
std::vector<int> infer_grading(const PolyMatrix& matrix, int multiplier = 1);

struct ZeroPattern {
  int rows = 0;  ///< R: rows N-R+1..N vanish
  int cols = 0;  ///< C: columns 1..C vanish
  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

ZeroPattern zero_pattern(const PolyMatrix& matrix);
inline ZeroPattern zero_pattern(const GradedMorphism& psi) { return zero_pattern(psi.matrix()); }

/// Involution of the largest Borel orbit met by the image, read off the
/// generic rank table. Throws InputError for rank-deficient morphisms.
Involution sigma_psi(const GradedMorphism& psi);

struct AvoidanceMode {
  enum class Kind { exact, monte_carlo };
  Kind kind = Kind::exact;
  int trials = 10000;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0x5eed;

  static AvoidanceMode exact() { return {}; }
  static AvoidanceMode monte_carlo(int trials) { return {Kind::monte_carlo, trials}; }
};

struct AvoidanceReport {
  enum class Status { certified, violated, inconclusive };
  Status status = Status::inconclusive;
  std::string method;  ///< "evaluation", "minor-gcd" or "monte-carlo"
  /// Projective point (over Q) at which the rank drops below N/2.
  std::optional<std::vector<Rational>> witness;
  /// gcd of the maximal minors (r = 2 exact mode).
  std::optional<Polynomial> minor_gcd;
  int trials = 0;
  int violations = 0;
  /// Sample points where only the reduction mod p lost rank.
  int modular_false_alarms = 0;
  std::string detail;
};

std::string to_string(AvoidanceReport::Status status);

/// Decides whether the image avoids the rank-deficient locus. Exact mode
/// handles r <= 2 (r = 1 by evaluation, r = 2 by the gcd of all maximal
/// minors); Monte Carlo mode can only refute.
AvoidanceReport check_l_avoidance(const GradedMorphism& psi, const AvoidanceMode& mode);

/// r_ij >= j - i + 1 - n for every 1 <= i < j <= N.
bool lemma_a_check(const RankTable& table, int n);

struct VerificationReport {
  bool square_zero = false;
  bool grading_ok = false;
  std::vector<std::string> grading_violations;
  int generic_rank = 0;
  RankTable generic_table{1};
  std::optional<Involution> sigma;
  ZeroPattern zero;
  AvoidanceReport avoidance;
  bool lemma_a_ok = false;

  /// Square-zero, graded, full generic rank, Lemma A, and not refuted.
  bool verified() const;
};

VerificationReport verify(const GradedMorphism& psi, const AvoidanceMode& mode);

/// R_{i,j}(u) with i > j: add u times row i to row j and subtract u times
/// column j from column i. This is conjugation by I + u E_{ji}, an upper
/// triangular matrix, so the Borel orbit at every point is unchanged.
PolyMatrix apply_row_operation(const PolyMatrix& m, int i, int j, const Polynomial& u);

/// Result of D_i(q): the true matrix is matrix / denominator, defined away
/// from the zero set of excluded.
struct ScaledMatrix {
  PolyMatrix matrix;
  Polynomial denominator;
  Polynomial excluded;
};

/// D_i(q): multiply row i by q and divide column i by q. When q does not
/// divide column i the whole matrix is multiplied by q to clear it.
ScaledMatrix apply_diagonal_operation(const PolyMatrix& m, int i, const Polynomial& q);

/// floor(log2(N / (R + C))) + 1 in exact integer arithmetic.
int conjecture_bound(int n, int rows, int cols);

}  // namespace borelkit

#endif  // BORELKIT_MORPHISM_HPP
