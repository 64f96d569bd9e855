#ifndef BORELKIT_POLYNOMIAL_HPP
#define BORELKIT_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "borelkit/scalar.hpp"

namespace borelkit {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order with x1 > x2 > ...; "less" sorts the larger
/// monomial first so that map iteration runs from the leading term down.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Variable names for parsing and printing. Defaults to x, y, z, w when
/// there are at most four variables and to x1, x2, ... otherwise; the
/// indexed form x<k> is always accepted on input.
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}

  /// Name of variable k (1-based) in a ring with nvars variables.
  std::string name(int k, int nvars) const;
  /// Alias list used when parsing; empty means the default x,y,z,w.
  const std::vector<std::string>& aliases() const;
  bool is_custom() const { return !names_.empty(); }

 private:
  std::vector<std::string> names_;
};

struct Homogeneity {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind;
  int degree = 0;  ///< meaningful when kind == homogeneous

  friend bool operator==(const Homogeneity&, const Homogeneity&) = default;
};

/// Multivariate polynomial over the rationals in a fixed number of variables.
/// No zero coefficients are stored; the zero polynomial has no terms.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  explicit Polynomial(int nvars);
  static Polynomial constant(int nvars, const Rational& c);
  /// The variable x_k, 1 <= k <= nvars.
  static Polynomial variable(int nvars, int k);
  static Polynomial monomial(const Rational& c, Monomial exponents);

  /// Parses the polynomial grammar; errors carry the character position.
  static Polynomial parse(std::string_view text, int nvars, const VariableNames& names = {});

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  Homogeneity homogeneity() const;
  /// Leading coefficient in grlex order; requires nonzero.
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned e) const;

  /// Quotient when other divides this exactly; throws InputError otherwise.
  Polynomial divide_exact(const Polynomial& other) const;
  bool divides(const Polynomial& other) const;

  Rational evaluate(std::span<const Rational> point) const;
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t prime) const;
  ModP evaluate(std::span<const ModP> point) const;

  /// Same polynomial viewed in nvars + extra variables.
  Polynomial extended(int extra) const;
  /// Replace x_k by lambda * x_k for every k.
  Polynomial scaled_variables(const Rational& lambda) const;

  std::string str(const VariableNames& names = {}) const;

 private:
  void check_same_ring(const Polynomial& other) const;

  int nvars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline Polynomial unit_like(const Polynomial& p) { return Polynomial::constant(p.nvars(), 1); }
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) { return a.divide_exact(b); }

/// gcd of homogeneous polynomials in two variables, normalized so the
/// leading coefficient is 1. Throws InputError if every input is zero, an
/// input is not homogeneous, or the ring does not have two variables.
Polynomial bivariate_homogeneous_gcd(std::span<const Polynomial> polys);

}  // namespace borelkit

#endif  // BORELKIT_POLYNOMIAL_HPP
