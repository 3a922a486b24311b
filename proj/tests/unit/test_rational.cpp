#include "doctest.h"

#include "coarsedim/rational.hpp"

using coarsedim::Rat;

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-4, 8) == Rat(-1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(7, 3) * Rat(3, 7) == Rat(1));
  CHECK(Rat(5) / Rat(2) == Rat(5, 2));
  CHECK(-Rat(5, 2) == Rat(-5, 2));
  CHECK(Rat(1, 3) - Rat(1, 3) == Rat(0));
}

TEST_CASE("rational comparisons") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(Rat(10, 3) > Rat(3));
  CHECK(Rat(2, 6) <= Rat(1, 3));
  CHECK(Rat(2, 6) >= Rat(1, 3));
}

TEST_CASE("floor and ceil") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(6).floor() == 6);
  CHECK(Rat(6).ceil() == 6);
}

TEST_CASE("parsing and printing round-trip") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-5") == Rat(-5));
  CHECK(Rat(22, 7).str() == "22/7");
  CHECK(Rat(4, 2).str() == "2");
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}
