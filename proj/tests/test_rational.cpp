#include "doctest.h"

#include "resurgence/rational.hpp"

using resurgence::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(2) - Rational(2, 3)) == Rational(4, 3));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(3) / Rational(5, 2)) == Rational(6, 5));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational ordering is exact") {
  CHECK(Rational(6, 5) < Rational(4, 3));
  CHECK(Rational(8, 7) < Rational(6, 5));
  CHECK(Rational(2, 2) == Rational(1));
  CHECK(Rational(1000000, 999999) > Rational(1));
  CHECK(max(Rational(4, 3), Rational(6, 5)) == Rational(4, 3));
}

TEST_CASE("rational printing") {
  CHECK(Rational(6, 5).str() == "6/5");
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-4, 6).str() == "-2/3");
}
