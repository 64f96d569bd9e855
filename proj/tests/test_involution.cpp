#include <algorithm>

#include "borelkit/errors.hpp"
#include "borelkit/involution.hpp"
#include "doctest.h"

using namespace borelkit;

namespace {

// Telephone numbers: involutions of {1..n}, identity included.
long telephone(int n) {
  long a = 1, b = 1;
  for (int k = 2; k <= n; ++k) {
    long c = b + (k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

long count_of_rank(int n, int s) {
  // n! / ((n-2s)! s! 2^s)
  long num = 1;
  for (int k = n - 2 * s + 1; k <= n; ++k) num *= k;
  for (int k = 1; k <= s; ++k) num /= 2 * k;
  return num;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  auto s = Involution::parse("(3,5)(1,2)", 6);
  CHECK(s.str() == "(1,2)(3,5)");
  CHECK(s.rank() == 2);
  CHECK(s.image(5) == 3);
  CHECK(s.image(4) == 4);
  CHECK(Involution::parse(s.str(), 6) == s);
  CHECK(s.lefts() == std::vector<int>{1, 3});
  CHECK(s.rights() == std::vector<int>{2, 5});
}

TEST_CASE("invalid involutions are rejected") {
  CHECK_THROWS_AS(Involution::parse("(1,2)(2,3)", 4), InputError);
  CHECK_THROWS_AS(Involution::parse("(2,2)", 4), InputError);
  CHECK_THROWS_AS(Involution::parse("(1,5)", 4), InputError);
  CHECK_THROWS_AS(Involution::parse("", 4), InputError);
  CHECK_THROWS_AS(Involution::parse("(1,2", 4), InputError);
  CHECK_THROWS_AS(Involution(4, {}), InputError);
}

TEST_CASE("enumeration matches the counting oracle") {
  for (int n = 2; n <= 10; ++n) {
    auto all = enumerate_involutions(n);
    CHECK(static_cast<long>(all.size()) == telephone(n) - 1);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (int s = 1; 2 * s <= n; ++s)
      CHECK(static_cast<long>(enumerate_involutions(n, s).size()) == count_of_rank(n, s));
  }
  CHECK(enumerate_involutions(8).size() == 763);
  CHECK(enumerate_involutions(6, 3).size() == 15);
  CHECK(enumerate_involutions(10, 5).size() == 945);
  CHECK_THROWS_AS(enumerate_involutions(1), InputError);
  CHECK_THROWS_AS(enumerate_involutions(4, 3), InputError);
}

TEST_CASE("pattern and involution are mutually inverse") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n)) {
      auto p = to_pattern(s);
      CHECK(p.rank() == s.rank());
      for (auto t : s.pairs()) CHECK(p.at(t.lo, t.hi));
      CHECK(to_involution(p) == s);
    }
}

TEST_CASE("conjugation and deletion") {
  auto s = Involution::parse("(1,3)(2,4)", 4);
  CHECK(s.conjugated(1, 2).str() == "(1,4)(2,3)");
  CHECK(s.without({1, 3})->str() == "(2,4)");
  CHECK_FALSE(Involution::parse("(1,3)", 4).without({1, 3}).has_value());
  CHECK(s.contains({2, 4}));
  CHECK_FALSE(s.contains({1, 2}));
}
