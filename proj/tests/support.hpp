#ifndef BORELKIT_TESTS_SUPPORT_HPP
#define BORELKIT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "borelkit/dense_matrix.hpp"
#include "borelkit/polynomial.hpp"

namespace borelkit::testing {

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero(std::mt19937_64& rng, int bound = 9) {
  for (;;) {
    auto q = random_rational(rng, bound);
    if (sgn(q) != 0) return q;
  }
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int nvars, int bound = 9) {
  std::vector<Rational> out;
  for (int k = 0; k < nvars; ++k) out.push_back(random_rational(rng, bound));
  return out;
}

/// Random invertible upper triangular matrix.
inline DenseMatrix<Rational> random_borel(std::mt19937_64& rng, std::size_t n) {
  DenseMatrix<Rational> b(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = random_nonzero(rng);
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = random_rational(rng);
  }
  return b;
}

/// Inverse of an invertible upper triangular matrix by back substitution.
inline DenseMatrix<Rational> upper_inverse(const DenseMatrix<Rational>& b) {
  const std::size_t n = b.rows();
  DenseMatrix<Rational> inv(n, n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j + 1; ii-- > 0;) {
      Rational s = ii == j ? Rational(1) : Rational(0);
      for (std::size_t k = ii + 1; k <= j; ++k) s -= b(ii, k) * inv(k, j);
      inv(ii, j) = s / b(ii, ii);
    }
  }
  return inv;
}

/// Random polynomial with small coefficients and total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_degree, int terms) {
  Polynomial p(nvars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars, 0);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m[var(rng)];
    p += Polynomial::monomial(random_rational(rng, 5), m);
  }
  return p;
}

/// Random homogeneous polynomial of the given degree.
inline Polynomial random_homogeneous(std::mt19937_64& rng, int nvars, int degree, int terms) {
  Polynomial p(nvars);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars, 0);
    for (int k = 0; k < degree; ++k) ++m[var(rng)];
    p += Polynomial::monomial(random_rational(rng, 5), m);
  }
  return p;
}

}  // namespace borelkit::testing

#endif  // BORELKIT_TESTS_SUPPORT_HPP
