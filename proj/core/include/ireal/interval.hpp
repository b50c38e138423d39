#ifndef IREAL_INTERVAL_HPP
#define IREAL_INTERVAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ireal/base.hpp"
#include "ireal/rational.hpp"

namespace ireal {

// Closed rational interval [lo, hi], lo <= hi. Ordered by reverse inclusion:
// a narrower interval carries more information.
struct IntervalQ {
  Rational lo;
  Rational hi;

  IntervalQ() = default;
  IntervalQ(Rational l, Rational h);

  friend bool operator==(const IntervalQ& a, const IntervalQ& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

inline IntervalQ singleton(const Rational& q) { return IntervalQ(q, q); }

namespace interval {

// a ⊑ b iff a.lo <= b.lo <= b.hi <= a.hi.
bool leq(const IntervalQ& a, const IntervalQ& b);

// a ≪ b iff a.lo < b.lo and b.hi < a.hi (strict containment).
bool way_below(const IntervalQ& a, const IntervalQ& b);

// [lo - delta, hi + delta]; delta must be nonnegative.
IntervalQ extend(const IntervalQ& a, const Rational& delta);

Rational length(const IntervalQ& a);

// Consistency of a finite nonempty set: max of lows <= min of highs.
bool consistent(std::span<const IntervalQ> set);

// Least upper bound [max lows, min highs]; throws ConsistencyError when the
// set is inconsistent, DomainError when empty.
IntervalQ sup(std::span<const IntervalQ> set);

// Decides whether A and D are separated: sup A exists, has positive length,
// and no d in D is below it. On success returns the witness w satisfying
// a ≪ w for every a in A and ¬(d ≪ w) for every d in D, built from the
// endpoint sets of D falling strictly inside sup A. Negative answers carry
// no witness.
std::optional<IntervalQ> separated(std::span<const IntervalQ> A,
                                   std::span<const IntervalQ> D);

std::string to_string(const IntervalQ& a);

// Parses the rendering "[p, q]" with rationals as "n" or "n/d".
IntervalQ parse(const std::string& text);

}  // namespace interval

// The predomain base of rational intervals.
//
// The enumeration interleaves two families: even indices walk a multi-scale
// dyadic covering family (centers on the 1/32 grid in [-2, 2], half-widths
// 2^-s for every s), odd indices decode (numerator, denominator) quadruples
// through nested pairing functions, which makes the enumeration surjective.
// The covering family front-loads narrow guards so that step-function
// constructions indexed by enumeration prefixes reach useful precision at
// feasible depths.
struct IqBase {
  using Element = IntervalQ;
  static constexpr bool pairwise_consistency = true;

  static bool leq(const Element& a, const Element& b) { return interval::leq(a, b); }
  static bool way_below(const Element& a, const Element& b) { return interval::way_below(a, b); }
  static Element approx(const Element& b, std::size_t i) {
    return interval::extend(b, pow2(-static_cast<std::int64_t>(i)));
  }
  static bool consistent(std::span<const Element> set) { return interval::consistent(set); }
  static Element sup(std::span<const Element> set) { return interval::sup(set); }
  static std::optional<Element> separated(std::span<const Element> a,
                                          std::span<const Element> d) {
    return interval::separated(a, d);
  }

  // Margin-midpoint interpolant: valid whenever a ≪ c.
  static Element interpolate(const Element& a, const Element& c);

  // Permanent probe failure: p lies entirely at or left of y's low endpoint,
  // or entirely at or right of its high endpoint. Lows of a chain only rise
  // and highs only fall, so the failure survives every refinement.
  static bool refutes(const Element& p, const Element& y) {
    return p.hi <= y.lo || p.lo >= y.hi;
  }

  static Element enumerate(const Integer& index);
  static Integer index_of(const Element& b);
};

static_assert(PredomainBase<IqBase>);
static_assert(SeparatedBase<IqBase>);

}  // namespace ireal

#endif
