#include <doctest.h>

#include "ireal/newton.hpp"

using namespace ireal;

TEST_CASE("newton iterates for sqrt(2), derived by hand") {
  // upper(0) = 3/2, upper(1) = (3/2 + 4/3)/2 = 17/12, lower(1) = 2/(17/12) = 24/17
  reals::Real root = newton::sqrt(Rational(2));
  CHECK(root.at(0) == IntervalQ(Rational(4, 3), Rational(3, 2)));
  CHECK(root.at(1) == IntervalQ(Rational(24, 17), Rational(17, 12)));
  CHECK(root.at(2) == IntervalQ(Rational(816, 577), Rational(577, 408)));
  CHECK(interval::length(root.at(1)) == Rational(1, 204));
  CHECK(interval::length(root.at(2)) == Rational(1, 235416));
}

TEST_CASE("sqrt(1) is exact at every iterate") {
  reals::Real one = newton::sqrt(Rational(1));
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(one.at(n) == IntervalQ(Rational(1), Rational(1)));
  }
}

TEST_CASE("sqrt(4) first iterate") {
  reals::Real root = newton::sqrt(Rational(4));
  IntervalQ first = root.at(1);
  CHECK(first == IntervalQ(Rational(80, 41), Rational(41, 20)));
  CHECK(first.lo * first.lo <= Rational(4));
  CHECK(Rational(4) <= first.hi * first.hi);
}

TEST_CASE("nonpositive arguments are rejected") {
  CHECK_THROWS_AS(newton::sqrt(Rational(0)), DomainError);
  CHECK_THROWS_AS(newton::sqrt(Rational(-2)), DomainError);
}

TEST_CASE("table rows carry exact widths and the halving modulus") {
  auto rows = newton::sqrt_table(Rational(2), 5);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].lower == Rational(24, 17));
  CHECK(rows[0].upper == Rational(17, 12));
  CHECK(rows[0].width == Rational(1, 204));
  CHECK(rows[0].modulus_bound == Rational(1, 12));  // (1/6) / 2
  CHECK(rows[1].width == Rational(1, 235416));
  CHECK(rows[4].modulus_bound == Rational(1, 192));
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].iteration == i + 1);
}

TEST_CASE("width hint certifies totality") {
  // the hint rests on the halving bound, which is far more conservative than
  // the quadratic convergence, so only small precisions are probed directly
  reals::Real root = newton::sqrt(Rational(2));
  REQUIRE(root.width_hint().has_value());
  for (std::size_t k : {1u, 4u, 12u}) {
    std::size_t n = (*root.width_hint())(k);
    CHECK(interval::length(root.at(n)) <= pow2(-static_cast<std::int64_t>(k)));
  }
}
