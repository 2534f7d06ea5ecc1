#include <doctest.h>

#include "hjrelax/rational.hpp"

using namespace hjrelax;

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("-2.375") == Rational(-19, 8));
  CHECK(Rational::parse("25e-3") == Rational(1, 40));
  CHECK(Rational::parse("1e2") == Rational(100));
  CHECK(Rational::parse("1.5e1") == Rational(15));
  CHECK(Rational::parse(" -0.1 ") == Rational(-1, 10));
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("canonical form: reduced, positive denominator") {
  Rational a(6, -4);
  CHECK(a == Rational(-3, 2));
  CHECK(a.denominator() == 2);
  CHECK(a.numerator() == -3);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), InvalidInputs);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInputs);
}

TEST_CASE("doubles convert exactly") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(-3.0) == Rational(-3));
  CHECK(Rational::from_double(0.1) != Rational(1, 10));  // 0.1 is not representable
}

TEST_CASE("extended rationals order totally") {
  ExtendedRational ninf = ExtendedRational::neg_inf();
  ExtendedRational pinf = ExtendedRational::pos_inf();
  ExtendedRational x(Rational(1, 2));
  CHECK(ninf < x);
  CHECK(x < pinf);
  CHECK(ninf < pinf);
  CHECK(-pinf == ninf);
  CHECK(-x == ExtendedRational(Rational(-1, 2)));
  CHECK_FALSE(ninf < ninf);
  CHECK(ninf <= ninf);
  CHECK_THROWS_AS(pinf.finite(), InvalidInputs);
  CHECK(x.finite() == Rational(1, 2));
}
