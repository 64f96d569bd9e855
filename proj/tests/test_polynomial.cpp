#include <random>

#include "borelkit/dense_matrix.hpp"
#include "borelkit/errors.hpp"
#include "borelkit/polynomial.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace borelkit;

TEST_CASE("primality against trial division") {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == slow(n));
  CHECK(is_prime(kDefaultPrime));
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("modular arithmetic") {
  const std::uint64_t p = 101;
  for (std::uint64_t a = 1; a < p; ++a) CHECK((ModP(a, p) * ModP(a, p).inverse()).value() == 1);
  CHECK(ModP::from_rational(Rational(1, 2), p).value() == 51);
  CHECK(ModP::from_rational(Rational(-1), p).value() == 100);
  CHECK_THROWS_AS(ModP::from_rational(Rational(1, 101), p), InputError);
}

TEST_CASE("parsing and printing") {
  auto p = Polynomial::parse("x^2 - 3/2*x*y + 1", 2);
  CHECK(p.str() == "x^2 - 3/2*x*y + 1");
  CHECK(p.total_degree() == 2);
  CHECK(p.homogeneity().kind == Homogeneity::Kind::inhomogeneous);
  CHECK(Polynomial::parse("(x+y)*(x-y)", 2) == Polynomial::parse("x^2 - y^2", 2));
  CHECK(Polynomial::parse("x1*x2", 2) == Polynomial::parse("x*y", 2));
  CHECK(Polynomial::parse("-x", 1).str() == "-x");
  CHECK(Polynomial::parse("0", 3).is_zero());
  CHECK(Polynomial::parse("2x y", 2) == Polynomial::parse("2*x*y", 2));
  VariableNames st({"s", "t"});
  auto q = Polynomial::parse("s^2*t - t", 2, st);
  CHECK(q.str(st) == "s^2*t - t");
  CHECK(q.str() == "x^2*y - y");
  CHECK_THROWS_AS(Polynomial::parse("z", 2), InputError);
  CHECK_THROWS_AS(Polynomial::parse("x +", 2), InputError);
  CHECK_THROWS_AS(Polynomial::parse("x^", 2), InputError);
  CHECK_THROWS_AS(Polynomial::parse("1/0", 2), InputError);
  CHECK_THROWS_AS(Polynomial::parse("(x", 2), InputError);
}

TEST_CASE("print-parse round trip on random polynomials") {
  std::mt19937_64 rng(3);
  for (int nvars = 1; nvars <= 5; ++nvars)
    for (int t = 0; t < 50; ++t) {
      auto p = testing::random_polynomial(rng, nvars, 4, 5);
      CHECK(Polynomial::parse(p.str(), nvars) == p);
    }
}

TEST_CASE("ring operations agree with evaluation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto a = testing::random_polynomial(rng, 3, 3, 4);
    auto b = testing::random_polynomial(rng, 3, 3, 4);
    auto pt = testing::random_point(rng, 3);
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK(a.pow(3).evaluate(pt) == a.evaluate(pt) * a.evaluate(pt) * a.evaluate(pt));
    if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
    std::vector<ModP> mp;
    for (const auto& c : pt) mp.push_back(ModP::from_rational(c, kDefaultPrime));
    CHECK(a.evaluate(mp) == ModP::from_rational(a.evaluate(pt), kDefaultPrime));
  }
}

TEST_CASE("exact division") {
  auto x = Polynomial::variable(2, 1), y = Polynomial::variable(2, 2);
  CHECK((x * x - y * y).divide_exact(x - y) == x + y);
  CHECK_THROWS_AS((x * x + y).divide_exact(x), InputError);
  CHECK(x.divides(x * y));
  CHECK_FALSE((x + y).divides(x * y));
}

TEST_CASE("weighted scaling") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto p = testing::random_homogeneous(rng, 2, 3, 4);
    Rational lambda = testing::random_nonzero(rng);
    auto pt = testing::random_point(rng, 2);
    Rational l3 = lambda * lambda * lambda;
    CHECK(p.scaled_variables(lambda).evaluate(pt) == l3 * p.evaluate(pt));
  }
}

TEST_CASE("bivariate homogeneous gcd") {
  auto P = [](const char* s) { return Polynomial::parse(s, 2); };
  std::vector<Polynomial> a{P("x^2 - y^2"), P("x^2 + x*y")};
  CHECK(bivariate_homogeneous_gcd(a) == P("x + y"));
  std::vector<Polynomial> b{P("x^2*y"), P("x*y^2")};
  CHECK(bivariate_homogeneous_gcd(b) == P("x*y"));
  std::vector<Polynomial> c{P("x^2 + y^2"), P("x*y")};
  CHECK(bivariate_homogeneous_gcd(c) == P("1"));
  std::vector<Polynomial> d{P("0"), P("2*x - 4*y")};
  CHECK(bivariate_homogeneous_gcd(d) == P("x - 2*y"));
  std::vector<Polynomial> bad{P("x + 1")};
  CHECK_THROWS_AS(bivariate_homogeneous_gcd(bad), InputError);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    auto g = testing::random_homogeneous(rng, 2, 2, 3);
    auto u = testing::random_homogeneous(rng, 2, 2, 3);
    auto v = testing::random_homogeneous(rng, 2, 3, 3);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    std::vector<Polynomial> pair{g * u, g * v};
    auto h = bivariate_homogeneous_gcd(pair);
    CHECK(g.divides(h));
    CHECK(h.divides(g * u));
    CHECK(h.divides(g * v));
  }
}

TEST_CASE("determinants: elimination against cofactor expansion") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      DenseMatrix<Rational> m(n, n, Rational(0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = testing::random_rational(rng, 3);
      CHECK(determinant_bareiss(m) == determinant_cofactor(m));
      DenseMatrix<Polynomial> pm(n, n, Polynomial(2));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pm(i, j) = testing::random_polynomial(rng, 2, 1, 2);
      CHECK(determinant_bareiss(pm) == determinant_cofactor(pm));
    }
}

TEST_CASE("rank over Q and mod p agree on small integer matrices") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int t = 0; t < 100; ++t) {
    DenseMatrix<Rational> m(5, 6, Rational(0));
    DenseMatrix<ModP> mp(5, 6, ModP(0, kDefaultPrime));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 6; ++j) {
        int v = val(rng) * (val(rng) != 0);
        m(i, j) = v;
        mp(i, j) = ModP::from_rational(Rational(v), kDefaultPrime);
      }
    CHECK(exact_rank(m) == exact_rank(mp));
  }
}
