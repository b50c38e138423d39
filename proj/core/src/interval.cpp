#include "ireal/interval.hpp"

#include <algorithm>

#include "ireal/errors.hpp"

namespace ireal {

IntervalQ::IntervalQ(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) {
    throw DomainError("interval with lo > hi: " + interval::to_string(*this));
  }
}

namespace interval {

bool leq(const IntervalQ& a, const IntervalQ& b) {
  return a.lo <= b.lo && b.hi <= a.hi;
}

bool way_below(const IntervalQ& a, const IntervalQ& b) {
  return a.lo < b.lo && b.hi < a.hi;
}

IntervalQ extend(const IntervalQ& a, const Rational& delta) {
  if (delta.sign() < 0) throw DomainError("extend with negative delta");
  return IntervalQ(a.lo - delta, a.hi + delta);
}

Rational length(const IntervalQ& a) { return a.hi - a.lo; }

namespace {

std::pair<Rational, Rational> endpoint_envelope(std::span<const IntervalQ> set) {
  if (set.empty()) throw DomainError("empty interval set");
  Rational max_lo = set[0].lo;
  Rational min_hi = set[0].hi;
  for (const IntervalQ& iv : set.subspan(1)) {
    max_lo = max(max_lo, iv.lo);
    min_hi = min(min_hi, iv.hi);
  }
  return {max_lo, min_hi};
}

}  // namespace

bool consistent(std::span<const IntervalQ> set) {
  auto [max_lo, min_hi] = endpoint_envelope(set);
  return max_lo <= min_hi;
}

IntervalQ sup(std::span<const IntervalQ> set) {
  auto [max_lo, min_hi] = endpoint_envelope(set);
  if (min_hi < max_lo) throw ConsistencyError("sup of inconsistent interval set");
  return IntervalQ(max_lo, min_hi);
}

std::optional<IntervalQ> separated(std::span<const IntervalQ> A,
                                   std::span<const IntervalQ> D) {
  if (A.empty()) throw DomainError("separated: A must be nonempty");
  if (!consistent(A)) return std::nullopt;
  const IntervalQ bound = sup(A);
  const Rational& a = bound.lo;
  const Rational& b = bound.hi;
  if (a == b) return std::nullopt;
  for (const IntervalQ& d : D) {
    if (leq(d, bound)) return std::nullopt;
  }

  // Endpoint sets of D falling strictly inside (a, b).
  std::optional<Rational> min_low;   // min of D-lows inside
  std::optional<Rational> max_high;  // max of D-highs inside
  for (const IntervalQ& d : D) {
    if (a < d.lo && d.lo < b && (!min_low || d.lo < *min_low)) min_low = d.lo;
    if (a < d.hi && d.hi < b && (!max_high || *max_high < d.hi)) max_high = d.hi;
  }

  Rational half(1, 2);
  if (!min_low && !max_high) {
    Rational mid = (a + b) * half;
    return IntervalQ(mid, mid);
  }
  Rational eps, delta;
  if (min_low && max_high) {
    eps = min(*min_low, *max_high);
    delta = max(*min_low, *max_high);
  } else {
    eps = delta = min_low ? *min_low : *max_high;
  }
  return IntervalQ((eps + a) * half, (delta + b) * half);
}

std::string to_string(const IntervalQ& a) {
  return "[" + ireal::to_string(a.lo) + ", " + ireal::to_string(a.hi) + "]";
}

IntervalQ parse(const std::string& text) {
  auto strip = [](std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
  };
  std::string body = strip(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError(0, "interval must look like \"[p, q]\": " + text);
  }
  body = body.substr(1, body.size() - 2);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) {
    throw ParseError(1, "interval needs two comma-separated endpoints: " + text);
  }
  Rational lo = parse_rational(strip(body.substr(0, comma)));
  Rational hi = parse_rational(strip(body.substr(comma + 1)));
  return IntervalQ(lo, hi);
}

}  // namespace interval

IntervalQ IqBase::interpolate(const Element& a, const Element& c) {
  if (!way_below(a, c)) {
    throw DomainError("interpolate requires a \xe2\x89\xaa c");
  }
  Rational half(1, 2);
  return IntervalQ((a.lo + c.lo) * half, (c.hi + a.hi) * half);
}

namespace {

constexpr std::int64_t kGridDenominator = 32;
constexpr std::int64_t kGridRow = 129;  // centers z/32 for |z| <= 64

}  // namespace

IntervalQ IqBase::enumerate(const Integer& index) {
  if (index < 0) throw DomainError("enumerate: negative index");
  using namespace pairing;
  if (index % 2 == 0) {
    Integer j = index / 2;
    Integer scale = j / kGridRow;
    Integer pos = j % kGridRow;
    Rational center(zigzag(pos), Integer(kGridDenominator));
    std::int64_t s = scale.convert_to<std::int64_t>();
    Rational hw = pow2(-s);
    return IntervalQ(center - hw, center + hw);
  }
  Integer j = (index - 1) / 2;
  auto [u, v] = cantor_inv(j);
  auto [pn, pd] = cantor_inv(u);
  auto [qn, qd] = cantor_inv(v);
  Rational p(zigzag(pn), pd + 1);
  Rational q(zigzag(qn), qd + 1);
  return p <= q ? IntervalQ(p, q) : IntervalQ(q, p);
}

Integer IqBase::index_of(const Element& b) {
  using namespace pairing;
  // Dyadic covering family: center on the 1/32 grid within [-2, 2], half
  // width an exact power 2^-s with s >= 0.
  Rational center = (b.lo + b.hi) * Rational(1, 2);
  Rational hw = (b.hi - b.lo) * Rational(1, 2);
  Rational scaled = center * Rational(kGridDenominator);
  if (scaled.denominator() == 1 && abs(scaled.numerator()) <= 64 && hw.numerator() == 1) {
    Integer d = hw.denominator();
    if ((d & (d - 1)) == 0) {  // power of two, so hw = 2^-s <= 1
      Integer s(boost::multiprecision::msb(d));
      Integer t = zigzag_inv(scaled.numerator());
      return 2 * (s * kGridRow + t);
    }
  }
  Integer u = cantor(zigzag_inv(b.lo.numerator()), b.lo.denominator() - 1);
  Integer v = cantor(zigzag_inv(b.hi.numerator()), b.hi.denominator() - 1);
  return 2 * cantor(u, v) + 1;
}

}  // namespace ireal
