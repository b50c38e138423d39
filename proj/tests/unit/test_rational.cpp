#include <doctest.h>

#include "ireal/rational.hpp"

using namespace ireal;

TEST_CASE("exact addition") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  Rational x(7, 5);
  CHECK(Rational(0) + x == x);
  // cross-multiplied by hand: 17*17 - 24*12 = 289 - 288 = 1 over 12*17 = 204
  CHECK(Rational(17, 12) + Rational(-24, 17) == Rational(1, 204));
}

TEST_CASE("canonical form") {
  Rational r(-24, -36);
  CHECK(r.numerator() == 2);
  CHECK(r.denominator() == 3);
  CHECK(cmp(Rational(1, 3), Rational(2, 6)) == 0);
  CHECK(Rational(1, 3) == Rational(2, 6));
}

TEST_CASE("basic operations") {
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(0) == Rational(1));
  CHECK(pow2(5) == Rational(32));
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(min(Rational(1, 2), Rational(1, 3)) == Rational(1, 3));
  CHECK(max(Rational(1, 2), Rational(1, 3)) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1) / Rational(3) == Rational(1, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(Rational(1)) == 0);
  CHECK(ceil_log2(Rational(1, 6)) == -2);  // 1/8 < 1/6 <= 1/4
  CHECK(ceil_log2(Rational(3)) == 2);
  CHECK(ceil_log2(Rational(4)) == 2);
  CHECK(ceil_log2(Rational(5)) == 3);
  CHECK_THROWS_AS(ceil_log2(Rational(0)), DomainError);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal_string(Rational(1, 204), 2) == "4.9e-3");
  CHECK(to_decimal_string(Rational(1, 235416), 2) == "4.2e-6");
  CHECK(to_decimal_string(Rational(0), 2) == "0.0");
  // plain decimal inside the scientific thresholds
  CHECK(to_decimal_string(Rational(83, 1000), 2) == "0.083");
  CHECK(to_decimal_string(Rational(1, 2), 2) == "0.50");
  CHECK(to_decimal_string(Rational(1414, 1000), 2) == "1.4");
  CHECK(to_decimal_string(Rational(1234), 3) == "1230");
  CHECK(to_decimal_string(Rational(10000), 2) == "1.0e4");
  CHECK(to_decimal_string(Rational(-1, 204), 2) == "-4.9e-3");
  // ties round away from zero
  CHECK(to_decimal_string(Rational(125, 1000), 2) == "0.13");
  CHECK(to_decimal_string(Rational(-125, 1000), 2) == "-0.13");
  // rounding can carry into the next decade
  CHECK(to_decimal_string(Rational(995, 100), 2) == "10");
  CHECK(to_decimal_string(Rational(999, 100000), 2) == "0.010");
}

TEST_CASE("scientific rendering used by tables") {
  CHECK(to_scientific_string(Rational(1, 12), 2) == "8.3e-2");
  CHECK(to_scientific_string(Rational(1, 192), 2) == "5.2e-3");
  CHECK(to_scientific_string(Rational(3, 2), 2) == "1.5e0");
}

TEST_CASE("parsing") {
  CHECK(parse_rational("17/12") == Rational(17, 12));
  CHECK(parse_rational("-24/17") == Rational(-24, 17));
  CHECK(parse_rational("42") == Rational(42));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("to_string") {
  CHECK(to_string(Rational(1, 204)) == "1/204");
  CHECK(to_string(Rational(-3)) == "-3");
}
