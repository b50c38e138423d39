#ifndef IREAL_REALS_HPP
#define IREAL_REALS_HPP

#include <functional>
#include <memory>
#include <optional>

#include "ireal/chain.hpp"
#include "ireal/completion.hpp"
#include "ireal/interval.hpp"

namespace ireal::reals {

using completion::ProbeResult;
using IvChain = Chain<IqBase>;

// Pointwise interval arithmetic. Absolute value is the exact range of |.|
// over the interval, split on the sign configuration of the endpoints.
IntervalQ iv_add(const IntervalQ& a, const IntervalQ& b);
IntervalQ iv_neg(const IntervalQ& a);
IntervalQ iv_abs(const IntervalQ& a);
IntervalQ iv_scale_nat(std::uint64_t c, const IntervalQ& a);

// The pointwise endpoint preorder a <= b iff a.lo <= b.hi (not the
// information order).
bool le_pointwise(const IntervalQ& a, const IntervalQ& b);

// An element of the completed interval domain, with an optional effective
// totality certificate: width_hint(k) is an index n with length(x_n) <= 2^-k.
// Operations propagate hints where they can; a missing hint only means that
// refine falls back to budget-bounded search.
class Real {
 public:
  using WidthHint = std::function<std::size_t(std::size_t)>;

  explicit Real(IvChain chain, std::optional<WidthHint> hint = std::nullopt)
      : chain_(std::move(chain)), hint_(std::move(hint)) {}

  const IvChain& chain() const { return chain_; }
  IntervalQ at(std::size_t n) const { return chain_.at(n); }
  const std::optional<WidthHint>& width_hint() const { return hint_; }

 private:
  IvChain chain_;
  std::optional<WidthHint> hint_;
};

// The constant chain [q, q]; exact, so the hint is trivial.
Real embed(const Rational& q);

Real add(const Real& x, const Real& y);
Real neg(const Real& x);
Real sub(const Real& x, const Real& y);
Real abs(const Real& x);

// c * x as iterated addition; the only scaling the arithmetic provides.
Real scale_nat(std::uint64_t c, const Real& x);

// x_n padded to [lo - pad(n), hi + pad(n)]; pad must be nonnegative.
Real pad(const Real& x, const Rational& delta);
Real pad_seq(const Real& x, std::function<Rational(std::size_t)> pads);

// Probes 0 <= x at precision k: confirmed once a level's low endpoint
// reaches -2^-k, refuted once a level's high endpoint falls below it.
ProbeResult nonneg_probe(const Real& x, std::size_t k, std::size_t budget);

// x <= y rendered as 0 <= y - x.
ProbeResult le_probe(const Real& x, const Real& y, std::size_t k, std::size_t budget);

// First chain element of width at most 2^-k, searching indices up to the
// width hint when one is present, else up to the budget. The principal
// extraction primitive; exhaustion signals a possibly non-total element.
IntervalQ refine(const Real& x, std::size_t k, std::size_t budget);

// Nonincreasing sequence of extended nonnegative rationals that must fall
// below every positive rational. Infinite terms stand for not-yet-defined
// approximations and support comparison only.
class ExtRational {
 public:
  static ExtRational infinity() { return ExtRational(); }
  ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator<=(const ExtRational& a, const ExtRational& b) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return *a.value_ <= *b.value_;
  }

 private:
  ExtRational() = default;
  std::optional<Rational> value_;
};

class ClassicalNullSeq {
 public:
  using Terms = std::function<ExtRational(std::size_t)>;
  explicit ClassicalNullSeq(Terms terms);

  // Memoized; throws ChainError if a term rises above its predecessor.
  ExtRational at(std::size_t n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Rational sequence with a worst-case modulus of convergence:
// |seq(n) - seq(m)| <= 2^-k for n, m >= modulus(k).
struct CauchyReal {
  std::function<Rational(std::size_t)> seq;
  std::function<std::size_t(std::size_t)> modulus;
};

// Rational sequence with a modulus of non-divergence: a classical null
// sequence bounding all oscillation beyond each index.
struct MarkovReal {
  std::function<Rational(std::size_t)> seq;
  ClassicalNullSeq modulus;
};

// The waiting function of a nondecreasing modulus M: W(n) = 0 up to M(0),
// then grows exactly when M permits, so that M(W(n)) <= n from M(0) on and
// W is unbounded. Memoized; M is validated nondecreasing where consulted.
std::function<std::size_t(std::size_t)> waiting_function(
    std::function<std::size_t(std::size_t)> M);

// Reuses the sequence and converts the worst-case modulus into a modulus of
// non-divergence: below M(0) a crude oscillation bound, above it 2^-W(n).
MarkovReal cauchy_to_markov(const CauchyReal& c);

// Midpoint sequence with the interval widths as modulus.
MarkovReal total_to_markov(const Real& x);

// Running suprema of the intervals seq(i) +/- modulus(i). Levelwise
// inconsistency means the modulus does not bound the oscillation and is a
// hard error. Infinite modulus terms contribute no interval; the modulus
// must be finite by index 0 for the chain to start.
Real markov_to_total(const MarkovReal& q);

}  // namespace ireal::reals

#endif
