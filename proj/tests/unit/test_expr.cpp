#include <doctest.h>

#include "ireal/expr.hpp"

using namespace ireal;
using namespace ireal::expr;

TEST_CASE("parsing builds the expected trees") {
  CHECK(to_string(parse("sqrt(2) + -1")) == "(sqrt(2) + -1)");
  CHECK(to_string(parse("abs(1/3 + -1/2)")) == "abs((1/3 + -1/2))");
  CHECK(to_string(parse("2 * 3")) == "2*3");
  CHECK(to_string(parse("3 * sqrt(2) + 1")) == "(3*sqrt(2) + 1)");
  CHECK(to_string(parse("(1/2)")) == "1/2");
  CHECK(to_string(parse("1.25")) == "5/4");
  CHECK_THROWS_AS(parse("1/3 + +"), ParseError);
  CHECK_THROWS_AS(parse("sqrt(2"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("1 2"), ParseError);
}

TEST_CASE("evaluation is exact on rational expressions") {
  Evaluated v = evaluate(parse("1/3 + 1/6"), 64);
  REQUIRE(v.exact.has_value());
  CHECK(*v.exact == Rational(1, 2));
  CHECK(reals::refine(v.value, 5, 64) == IntervalQ(Rational(1, 2), Rational(1, 2)));

  Evaluated a = evaluate(parse("abs(-2)"), 64);
  CHECK(*a.exact == Rational(2));
  CHECK(reals::refine(a.value, 1, 64) == IntervalQ(Rational(2), Rational(2)));

  Evaluated s = evaluate(parse("2 * (1/4 + 1/4)"), 64);
  CHECK(*s.exact == Rational(1));
}

TEST_CASE("square roots certify positivity first") {
  Evaluated v = evaluate(parse("sqrt(2)"), 64);
  CHECK_FALSE(v.exact.has_value());
  IntervalQ e = reals::refine(v.value, 10, 200);
  CHECK(interval::length(e) <= pow2(-10));
  CHECK(e.lo * e.lo <= Rational(2));
  CHECK(Rational(2) <= e.hi * e.hi);

  CHECK_THROWS_AS(evaluate(parse("sqrt(-1)"), 64), CertificateError);
  CHECK_THROWS_AS(evaluate(parse("sqrt(0)"), 64), CertificateError);
  CHECK_THROWS_AS(evaluate(parse("sqrt(1/3 + -1/3)"), 64), CertificateError);
  // the grammar admits nested roots; evaluation restricts to rational args
  CHECK_THROWS_AS(evaluate(parse("sqrt(sqrt(2))"), 64), DomainError);
}

TEST_CASE("sqrt of a computed rational works through the probe") {
  Evaluated v = evaluate(parse("sqrt(1/3 + 1/6 + -1/4)"), 64);  // sqrt(1/4)
  IntervalQ e = reals::refine(v.value, 20, 200);
  CHECK(e.lo * e.lo <= Rational(1, 4));
  CHECK(Rational(1, 4) <= e.hi * e.hi);
  CHECK(interval::length(e) <= pow2(-20));
}
