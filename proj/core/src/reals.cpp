#include "ireal/reals.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace ireal::reals {

IntervalQ iv_add(const IntervalQ& a, const IntervalQ& b) {
  return IntervalQ(a.lo + b.lo, a.hi + b.hi);
}

IntervalQ iv_neg(const IntervalQ& a) { return IntervalQ(-a.hi, -a.lo); }

IntervalQ iv_abs(const IntervalQ& a) {
  if (a.lo.sign() >= 0) return a;
  if (a.hi.sign() <= 0) return iv_neg(a);
  return IntervalQ(Rational(0), max(-a.lo, a.hi));
}

IntervalQ iv_scale_nat(std::uint64_t c, const IntervalQ& a) {
  Rational factor{Integer(c)};
  return IntervalQ(a.lo * factor, a.hi * factor);
}

bool le_pointwise(const IntervalQ& a, const IntervalQ& b) { return a.lo <= b.hi; }

Real embed(const Rational& q) {
  return Real(IvChain::constant(singleton(q)), [](std::size_t) { return std::size_t{0}; });
}

namespace {

std::optional<Real::WidthHint> combine_add_hints(const Real& x, const Real& y) {
  if (!x.width_hint() || !y.width_hint()) return std::nullopt;
  Real::WidthHint hx = *x.width_hint();
  Real::WidthHint hy = *y.width_hint();
  return Real::WidthHint([hx, hy](std::size_t k) { return std::max(hx(k + 1), hy(k + 1)); });
}

}  // namespace

Real add(const Real& x, const Real& y) {
  IvChain xc = x.chain(), yc = y.chain();
  IvChain out([xc, yc](std::size_t n) { return iv_add(xc.at(n), yc.at(n)); },
              IvChain::Checked::trusted);
  return Real(std::move(out), combine_add_hints(x, y));
}

Real neg(const Real& x) {
  IvChain xc = x.chain();
  IvChain out([xc](std::size_t n) { return iv_neg(xc.at(n)); }, IvChain::Checked::trusted);
  return Real(std::move(out), x.width_hint());
}

Real sub(const Real& x, const Real& y) { return add(x, neg(y)); }

Real abs(const Real& x) {
  IvChain xc = x.chain();
  IvChain out([xc](std::size_t n) { return iv_abs(xc.at(n)); }, IvChain::Checked::trusted);
  return Real(std::move(out), x.width_hint());
}

Real scale_nat(std::uint64_t c, const Real& x) {
  if (c == 0) return embed(Rational(0));
  IvChain xc = x.chain();
  IvChain out([c, xc](std::size_t n) { return iv_scale_nat(c, xc.at(n)); },
              IvChain::Checked::trusted);
  std::optional<Real::WidthHint> hint;
  if (x.width_hint()) {
    Real::WidthHint hx = *x.width_hint();
    std::size_t shift = static_cast<std::size_t>(ceil_log2(Rational(Integer(c))));
    hint = Real::WidthHint([hx, shift](std::size_t k) { return hx(k + shift); });
  }
  return Real(std::move(out), hint);
}

Real pad(const Real& x, const Rational& delta) {
  return pad_seq(x, [delta](std::size_t) { return delta; });
}

Real pad_seq(const Real& x, std::function<Rational(std::size_t)> pads) {
  IvChain xc = x.chain();
  IvChain out(
      [xc, pads](std::size_t n) { return interval::extend(xc.at(n), pads(n)); },
      IvChain::Checked::monotone);
  return Real(std::move(out));
}

ProbeResult nonneg_probe(const Real& x, std::size_t k, std::size_t budget) {
  const Rational threshold = -pow2(-static_cast<std::int64_t>(k));
  for (std::size_t n = 0; n <= budget; ++n) {
    IntervalQ level = x.at(n);
    if (level.lo >= threshold) return ProbeResult::confirmed_up_to(n);
    if (level.hi < threshold) return ProbeResult::refuted(n, n);
  }
  return ProbeResult::inconclusive(budget);
}

ProbeResult le_probe(const Real& x, const Real& y, std::size_t k, std::size_t budget) {
  return nonneg_probe(sub(y, x), k, budget);
}

IntervalQ refine(const Real& x, std::size_t k, std::size_t budget) {
  const Rational target = pow2(-static_cast<std::int64_t>(k));
  const std::size_t bound = x.width_hint() ? (*x.width_hint())(k) : budget;
  for (std::size_t n = 0; n <= bound; ++n) {
    IntervalQ level = x.at(n);
    if (interval::length(level) <= target) return level;
  }
  throw BudgetError("refine: no level of width <= 2^-" + std::to_string(k) +
                    " within " + std::to_string(bound) +
                    " steps; element may not be total");
}

const Rational& ExtRational::value() const {
  if (!value_) throw DomainError("infinite modulus term has no rational value");
  return *value_;
}

struct ClassicalNullSeq::State {
  Terms terms;
  std::vector<ExtRational> memo;
  std::mutex mutex;
};

ClassicalNullSeq::ClassicalNullSeq(Terms terms) : state_(std::make_shared<State>()) {
  state_->terms = std::move(terms);
}

ExtRational ClassicalNullSeq::at(std::size_t n) const {
  State& st = *state_;
  std::scoped_lock lock(st.mutex);
  while (st.memo.size() <= n) {
    std::size_t k = st.memo.size();
    ExtRational next = st.terms(k);
    if (k > 0 && !(next <= st.memo.back())) {
      throw ChainError("null sequence increases at index " + std::to_string(k));
    }
    st.memo.push_back(next);
  }
  return st.memo[n];
}

std::function<std::size_t(std::size_t)> waiting_function(
    std::function<std::size_t(std::size_t)> M) {
  struct State {
    std::function<std::size_t(std::size_t)> m;
    std::map<std::size_t, std::size_t> seen;  // consulted points of M
    std::vector<std::size_t> w;
    std::mutex mutex;

    std::size_t eval_m(std::size_t k) {
      auto it = seen.find(k);
      if (it != seen.end()) return it->second;
      std::size_t v = m(k);
      auto [pos, _] = seen.emplace(k, v);
      if (pos != seen.begin() && std::prev(pos)->second > v) {
        throw DomainError("waiting_function: modulus not nondecreasing");
      }
      if (std::next(pos) != seen.end() && std::next(pos)->second < v) {
        throw DomainError("waiting_function: modulus not nondecreasing");
      }
      return v;
    }
  };
  auto st = std::make_shared<State>();
  st->m = std::move(M);
  return [st](std::size_t n) {
    std::scoped_lock lock(st->mutex);
    const std::size_t m0 = st->eval_m(0);
    while (st->w.size() <= n) {
      std::size_t k = st->w.size();
      if (k <= m0) {
        st->w.push_back(0);
        continue;
      }
      std::size_t prev = st->w.back();
      st->w.push_back(st->eval_m(prev + 1) <= k ? prev + 1 : prev);
    }
    return st->w[n];
  };
}

MarkovReal cauchy_to_markov(const CauchyReal& c) {
  auto seq = c.seq;
  auto W = waiting_function(c.modulus);
  const std::size_t m0 = c.modulus(0);
  ClassicalNullSeq modulus([seq, W, m0](std::size_t n) -> ExtRational {
    if (n < m0) {
      // 1 + the exact oscillation of the sequence on [n, M(0)].
      Rational lo = seq(n), hi = seq(n);
      for (std::size_t k = n + 1; k <= m0; ++k) {
        Rational v = seq(k);
        lo = min(lo, v);
        hi = max(hi, v);
      }
      return Rational(1) + (hi - lo);
    }
    return pow2(-static_cast<std::int64_t>(W(n)));
  });
  return MarkovReal{seq, std::move(modulus)};
}

MarkovReal total_to_markov(const Real& x) {
  IvChain chain = x.chain();
  auto seq = [chain](std::size_t n) {
    IntervalQ level = chain.at(n);
    return (level.lo + level.hi) * Rational(1, 2);
  };
  ClassicalNullSeq modulus([chain](std::size_t n) -> ExtRational {
    return interval::length(chain.at(n));
  });
  return MarkovReal{seq, std::move(modulus)};
}

Real markov_to_total(const MarkovReal& q) {
  auto seq = q.seq;
  ClassicalNullSeq modulus = q.modulus;
  IvChain chain(
      [seq, modulus](std::size_t n) {
        std::vector<IntervalQ> parts;
        for (std::size_t i = 0; i <= n; ++i) {
          ExtRational c = modulus.at(i);
          if (c.is_infinite()) continue;
          Rational center = seq(i);
          parts.emplace_back(center - c.value(), center + c.value());
        }
        if (parts.empty()) {
          throw DomainError("markov_to_total: modulus still infinite at level " +
                            std::to_string(n));
        }
        if (!interval::consistent(parts)) {
          throw ConsistencyError(
              "markov_to_total: invalid certificate, oscillation exceeds modulus at level " +
              std::to_string(n));
        }
        return interval::sup(parts);
      },
      IvChain::Checked::monotone);
  return Real(std::move(chain));
}

}  // namespace ireal::reals
