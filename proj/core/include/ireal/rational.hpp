#ifndef IREAL_RATIONAL_HPP
#define IREAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "ireal/errors.hpp"

namespace ireal {

using Integer = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational in canonical form: the denominator is
// positive and coprime to the numerator. Canonicalisation happens at
// construction, so equality is structural.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);

  const Integer numerator() const { return boost::multiprecision::numerator(value_); }
  const Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator-(const Rational& a) { return Rational(-a.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}
  Backend value_;
};

Rational add(const Rational& a, const Rational& b);
Rational sub(const Rational& a, const Rational& b);
Rational mul(const Rational& a, const Rational& b);
Rational neg(const Rational& a);
Rational div(const Rational& a, const Rational& b);  // throws DomainError on b = 0
Rational abs(const Rational& a);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Total order: -1, 0 or +1.
int cmp(const Rational& a, const Rational& b);

// 2^k for any integer k, exact.
Rational pow2(std::int64_t k);

// Smallest integer e with a <= 2^e; requires a > 0.
std::int64_t ceil_log2(const Rational& a);

// Round-to-nearest rendering with `sig_figs` significant figures, ties away
// from zero. Scientific notation when the leading digit sits at 10^-3 or
// below, or at 10^4 or above; plain decimal otherwise. Zero prints "0.0".
std::string to_decimal_string(const Rational& a, unsigned sig_figs);

// Same rounding, always scientific (the rendering used in tables).
std::string to_scientific_string(const Rational& a, unsigned sig_figs);

// "n" or "n/d" in canonical form.
std::string to_string(const Rational& a);

// Accepts "n", "n/d" and finite decimals like "-1.25".
Rational parse_rational(const std::string& text);

}  // namespace ireal

#endif
