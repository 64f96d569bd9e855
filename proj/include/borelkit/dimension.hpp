#ifndef BORELKIT_DIMENSION_HPP
#define BORELKIT_DIMENSION_HPP

#include <vector>

#include "borelkit/involution.hpp"

namespace borelkit {

/// Orbit dimension from Melnikov's formula
///   dim = N s + sum_t (i_t - j_t) - sum_{t>=2} f_t,
///   f_t = #{p < t : j_p < j_t} + #{p < t : j_p < i_t},
/// with transpositions in canonical order.
struct DimensionRecord {
  Involution sigma;
  int n;
  int rank;
  std::vector<int> f;  ///< f_2 .. f_s
  int dim;
};

DimensionRecord melnikov_dim(const Involution& sigma);

/// Melnikov's formula evaluated on a possibly empty transposition list; the
/// empty list (zero orbit) has dimension 0.
int melnikov_dim(int n, const std::vector<Transposition>& canonical_pairs);

/// N(N+1)/2 minus the dimension of {T upper triangular : T P = P T}, solved
/// exactly over the rationals.
int commutant_dim_oracle(const Involution& sigma);

enum class DpMethod { definition, characterization };

/// Membership in DP(N). sigma must have rank N/2 with N even.
bool is_dp(const Involution& sigma, DpMethod method);

std::vector<Involution> enumerate_dp(int n);

struct LemmaReport {
  int checked = 0;  ///< full-rank involutions containing (1,N)
  std::vector<Involution> counterexamples;
};

/// Exhaustively checks that no full-rank involution containing (1,N) is in
/// DP(N). Requires N even and N >= 4.
LemmaReport check_1n_lemma(int n);

}  // namespace borelkit

#endif  // BORELKIT_DIMENSION_HPP
