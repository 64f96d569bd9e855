#include "borelkit/constructions.hpp"
#include "borelkit/errors.hpp"
#include "borelkit/figures.hpp"
#include "doctest.h"

using namespace borelkit;

TEST_CASE("example generators") {
  auto ib = identity_block(2);
  CHECK(ib.size() == 4);
  CHECK(ib.nvars() == 1);
  CHECK(ib.matrix().entries().size() == 2);
  CHECK(ib.matrix().at(1, 3) == Polynomial::variable(1, 1));
  CHECK(ib.matrix().at(2, 4) == Polynomial::variable(1, 1));

  auto rf = row_family(3);
  CHECK(rf.matrix() == make_example("ex3").matrix());
  CHECK(rf.weights() == std::vector<int>{0, -1, -1, -1, -1, -1});
  CHECK(rf.matrix().at(1, 2) == Polynomial::parse("x^2", 2));
  CHECK(rf.matrix().at(1, 4) == Polynomial::parse("y^2", 2));
  CHECK(rf.matrix().at(3, 5) == Polynomial::parse("-x", 2));
  CHECK(row_family(2).matrix().at(1, 3) == Polynomial::parse("y", 2));

  auto k = koszul8();
  CHECK(k.matrix().at(1, 4) == Polynomial::parse("z", 3));
  CHECK(k.matrix().at(2, 6) == Polynomial::parse("-z", 3));
  CHECK((k.matrix() * k.matrix()).is_zero());

  for (int n = 1; n <= 6; ++n) CHECK((identity_block(n).matrix() * identity_block(n).matrix()).is_zero());
  for (int n = 2; n <= 6; ++n) CHECK((row_family(n).matrix() * row_family(n).matrix()).is_zero());
  CHECK((ex12().matrix() * ex12().matrix()).is_zero());

  CHECK_THROWS_AS(make_example("nope"), InputError);
  CHECK_THROWS_AS(make_example("row_family"), InputError);
  CHECK_THROWS_AS(make_example("row_family", 1), InputError);
  CHECK_THROWS_AS(make_example("ex2", 3), InputError);
}

TEST_CASE("block patterns") {
  CHECK(BlockPattern::parse("1,3,2").sizes == std::vector<int>{1, 3, 2});
  CHECK(BlockPattern::parse("(1,2,1)").str() == "(1,2,1)");
  CHECK_THROWS_AS(BlockPattern::parse("1,,2"), InputError);
  CHECK_THROWS_AS(BlockPattern::parse("0,2"), InputError);
  CHECK(block_pattern_check(make_example("ex3"), BlockPattern{{1, 3, 2}}));
  CHECK(block_pattern_check(make_example("ex2"), BlockPattern{{1, 2, 1}}));
  CHECK_FALSE(block_pattern_check(make_example("ex2"), BlockPattern{{4}}));
  CHECK_THROWS_AS(block_pattern_check(make_example("ex2"), BlockPattern{{1, 2}}), InputError);
}

TEST_CASE("chessboard of two identity blocks") {
  auto a = identity_block(1);
  auto out = chessboard(a, BlockPattern{{1, 1}}, a, BlockPattern{{1, 1}});
  CHECK(out.size() == 4);
  CHECK((out.matrix() * out.matrix()).is_zero());
  CHECK(generic_rank(out.matrix()) == 2);
  CHECK(out.matrix().at(1, 3) == Polynomial::variable(1, 1));
  CHECK(out.matrix().at(2, 4) == Polynomial::variable(1, 1));
}

TEST_CASE("chessboard reproduces the printed 10 x 10 board") {
  auto out = chessboard(make_example("ex3"), BlockPattern{{1, 3, 2}}, make_example("ex2"), BlockPattern{{1, 2, 1}});
  CHECK(out.matrix() == chessboard_board_fixture());
  CHECK(generic_rank(out.matrix()) == 5);
  CHECK(zero_pattern(out) == ZeroPattern{3, 2});
}

TEST_CASE("chessboard errors") {
  auto ex2 = make_example("ex2");
  CHECK_THROWS_AS(chessboard(ex2, BlockPattern{{1, 2, 1}}, identity_block(1), BlockPattern{{1, 1}}), InputError);
  CHECK_THROWS_AS(chessboard(ex2, BlockPattern{{1, 2, 1}}, make_example("ex3"), BlockPattern{{1, 3, 2}}), InputError);
  CHECK_THROWS_AS(chessboard(ex2, BlockPattern{{4}}, ex2, BlockPattern{{4}}), InputError);
  CHECK_THROWS_AS(chessboard(ex2, BlockPattern{{1, 2, 1}}, koszul8(), BlockPattern{{1, 3, 3, 1}}), InputError);
}
