#include "borelkit/dimension.hpp"
#include "borelkit/errors.hpp"
#include "borelkit/order.hpp"
#include "doctest.h"

using namespace borelkit;

TEST_CASE("hand-computed dimensions") {
  CHECK(melnikov_dim(Involution::parse("(1,2)", 2)).dim == 1);
  CHECK(melnikov_dim(Involution::parse("(1,2)", 3)).dim == 2);
  CHECK(melnikov_dim(Involution::parse("(1,3)", 3)).dim == 1);
  CHECK(melnikov_dim(4, {}) == 0);
  auto rec = melnikov_dim(Involution::parse("(1,2)(3,4)", 4));
  CHECK(rec.rank == 2);
  CHECK(rec.f.size() == 1);
}

TEST_CASE("Melnikov formula agrees with the commutant up to N = 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n)) {
      INFO(s.str());
      CHECK(melnikov_dim(s).dim == commutant_dim_oracle(s));
    }
}

TEST_CASE("dimension is monotone along moves") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : enumerate_involutions(n))
      for (const auto& m : applicable_moves(s).moves) CHECK(melnikov_dim(m.result).dim < melnikov_dim(s).dim);
}

TEST_CASE("DP counts and method agreement") {
  CHECK(enumerate_dp(2).size() == 1);
  CHECK(enumerate_dp(4).size() == 2);
  CHECK(enumerate_dp(6).size() == 5);
  CHECK(enumerate_dp(8).size() == 14);
  for (int n = 2; n <= 8; n += 2)
    for (const auto& s : enumerate_involutions(n, n / 2))
      CHECK(is_dp(s, DpMethod::definition) == is_dp(s, DpMethod::characterization));
  CHECK_THROWS_AS(is_dp(Involution::parse("(1,2)", 4), DpMethod::definition), InputError);
  CHECK_THROWS_AS(enumerate_dp(5), InputError);
}

TEST_CASE("no DP matching contains (1,N)") {
  for (int n = 4; n <= 8; n += 2) {
    auto r = check_1n_lemma(n);
    CHECK(r.checked > 0);
    CHECK(r.counterexamples.empty());
  }
}
