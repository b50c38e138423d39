#include "ireal/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ireal {

namespace mp = boost::multiprecision;

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  // cpp_rational canonicalises the gcd but insists on a positive denominator
  if (den.sign() < 0) {
    value_ = Backend(-num, -den);
  } else {
    value_ = Backend(num, den);
  }
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(Rational::Backend(a.value_ / b.value_));
}

Rational add(const Rational& a, const Rational& b) { return a + b; }
Rational sub(const Rational& a, const Rational& b) { return a - b; }
Rational mul(const Rational& a, const Rational& b) { return a * b; }
Rational neg(const Rational& a) { return -a; }
Rational div(const Rational& a, const Rational& b) { return a / b; }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

int cmp(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

Rational pow2(std::int64_t k) {
  Integer shifted = Integer(1) << static_cast<unsigned>(k >= 0 ? k : -k);
  if (k >= 0) return Rational(shifted);
  return Rational(Integer(1), shifted);
}

std::int64_t ceil_log2(const Rational& a) {
  if (a.sign() <= 0) throw DomainError("ceil_log2 requires a positive argument");
  const Integer n = a.numerator();
  const Integer d = a.denominator();
  std::int64_t e = static_cast<std::int64_t>(mp::msb(n)) -
                   static_cast<std::int64_t>(mp::msb(d)) - 1;
  while (a > pow2(e)) ++e;
  return e;
}

namespace {

// Exponent of the leading decimal digit of n/d > 0: the unique e with
// 10^e <= n/d < 10^{e+1}.
std::int64_t decimal_exponent(const Integer& n, const Integer& d) {
  auto digits = [](const Integer& v) {
    return static_cast<std::int64_t>(v.str().size());
  };
  std::int64_t e = digits(n) - digits(d);
  auto at_least = [&](std::int64_t k) {  // n/d >= 10^k
    if (k >= 0) return n >= d * mp::pow(Integer(10), static_cast<unsigned>(k));
    return n * mp::pow(Integer(10), static_cast<unsigned>(-k)) >= d;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;
  return e;
}

struct RoundedDigits {
  std::string digits;  // exactly sig_figs characters
  std::int64_t exponent;
};

RoundedDigits round_significant(const Rational& a, unsigned sig_figs) {
  const Integer n = mp::abs(a.numerator());
  const Integer d = a.denominator();
  std::int64_t e = decimal_exponent(n, d);
  // m = round(|a| * 10^{sig_figs-1-e}), ties away from zero.
  std::int64_t shift = static_cast<std::int64_t>(sig_figs) - 1 - e;
  Integer num = n, den = d;
  if (shift >= 0) {
    num *= mp::pow(Integer(10), static_cast<unsigned>(shift));
  } else {
    den *= mp::pow(Integer(10), static_cast<unsigned>(-shift));
  }
  Integer q = num / den;
  Integer r = num % den;
  if (2 * r >= den) ++q;
  std::string digs = q.str();
  if (digs.size() > sig_figs) {  // carry: 99.5 -> 100
    digs.pop_back();
    ++e;
  }
  return {digs, e};
}

std::string format_scientific(const std::string& digs, std::int64_t e, bool negative) {
  std::string out = negative ? "-" : "";
  out += digs[0];
  if (digs.size() > 1) {
    out += '.';
    out += digs.substr(1);
  }
  out += 'e';
  out += std::to_string(e);
  return out;
}

std::string format_plain(const std::string& digs, std::int64_t e, bool negative) {
  std::string out = negative ? "-" : "";
  const std::int64_t sig = static_cast<std::int64_t>(digs.size());
  if (e < 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-e - 1), '0');
    out += digs;
  } else if (e + 1 >= sig) {
    out += digs;
    out.append(static_cast<std::size_t>(e + 1 - sig), '0');
  } else {
    out += digs.substr(0, static_cast<std::size_t>(e + 1));
    out += '.';
    out += digs.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

}  // namespace

std::string to_decimal_string(const Rational& a, unsigned sig_figs) {
  if (sig_figs == 0) throw DomainError("sig_figs must be at least 1");
  if (a.is_zero()) return "0.0";
  RoundedDigits r = round_significant(a, sig_figs);
  if (r.exponent <= -3 || r.exponent >= 4) {
    return format_scientific(r.digits, r.exponent, a.sign() < 0);
  }
  return format_plain(r.digits, r.exponent, a.sign() < 0);
}

std::string to_scientific_string(const Rational& a, unsigned sig_figs) {
  if (sig_figs == 0) throw DomainError("sig_figs must be at least 1");
  if (a.is_zero()) return "0.0";
  RoundedDigits r = round_significant(a, sig_figs);
  return format_scientific(r.digits, r.exponent, a.sign() < 0);
}

std::string to_string(const Rational& a) {
  std::string out = a.numerator().str();
  if (a.denominator() != 1) {
    out += '/';
    out += a.denominator().str();
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(i, "bad rational '" + text + "': " + msg);
  };
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto read_digits = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw fail("expected digits");
    return text.substr(start, i - start);
  };
  Integer num(read_digits());
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    Integer d(read_digits());
    if (d.is_zero()) throw fail("zero denominator");
    den = d;
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    std::string frac = read_digits();
    den = mp::pow(Integer(10), static_cast<unsigned>(frac.size()));
    num = num * den + Integer(frac);
  }
  if (i != text.size()) throw fail("trailing characters");
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace ireal
