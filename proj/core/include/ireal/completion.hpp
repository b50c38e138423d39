#ifndef IREAL_COMPLETION_HPP
#define IREAL_COMPLETION_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ireal/base.hpp"
#include "ireal/chain.hpp"
#include "ireal/errors.hpp"

namespace ireal::completion {

// Observable outcome of probing a classically defined relation to a finite
// depth. Confirmed is evidence on all probed instances, not a proof; Refuted
// carries indices witnessing a failure that is permanent by monotonicity.
struct ProbeResult {
  enum class Kind { confirmed, refuted, inconclusive };
  Kind kind;
  std::size_t depth = 0;   // confirmed: depth (or witness index) of the check
  std::size_t n = 0;       // refuted: index into the left chain
  std::size_t m = 0;       // refuted: index into the right chain
  std::size_t budget = 0;  // inconclusive: the exhausted budget

  static ProbeResult confirmed_up_to(std::size_t depth) {
    return {Kind::confirmed, depth, 0, 0, 0};
  }
  static ProbeResult refuted(std::size_t n, std::size_t m) {
    return {Kind::refuted, 0, n, m, 0};
  }
  static ProbeResult inconclusive(std::size_t budget) {
    return {Kind::inconclusive, 0, 0, 0, budget};
  }

  bool confirmed() const { return kind == Kind::confirmed; }
  bool is_refuted() const { return kind == Kind::refuted; }
  bool is_inconclusive() const { return kind == Kind::inconclusive; }

  std::string describe() const {
    switch (kind) {
      case Kind::confirmed:
        return "ConfirmedUpTo(" + std::to_string(depth) + ")";
      case Kind::refuted:
        return "Refuted(" + std::to_string(n) + ", " + std::to_string(m) + ")";
      default:
        return "Inconclusive(" + std::to_string(budget) + ")";
    }
  }
};

template <class B>
Chain<B> embed(typename B::Element b) {
  return Chain<B>::constant(std::move(b));
}

namespace detail {

// Searching slightly past the budget lets probes land strictly inside
// targets whose levels carry the canonical 2^-m approximation padding;
// without the slack such targets are never confirmable at any budget.
inline std::size_t search_bound(std::size_t budget) { return 2 * budget + 1; }

template <class B>
bool permanently_refutes(const typename B::Element& probe, const Chain<B>& y,
                         std::size_t deepest) {
  if (auto c = y.constant_value()) {
    return !B::way_below(probe, *c);
  }
  if constexpr (RefutingBase<B>) {
    return B::refutes(probe, y.at(deepest));
  } else {
    (void)deepest;
    return false;
  }
}

}  // namespace detail

// Probes the completion order x ⊑ y: for every n up to the budget, the
// canonical approximant of x_n must land way below some level of y.
template <class B>
ProbeResult leq_probe(const Chain<B>& x, const Chain<B>& y, std::size_t budget) {
  const std::size_t bound = detail::search_bound(budget);
  bool exhausted = false;
  for (std::size_t n = 0; n <= budget; ++n) {
    typename B::Element probe = B::approx(x.at(n), budget);
    bool found = false;
    for (std::size_t m = 0; m <= bound; ++m) {
      if (B::way_below(probe, y.at(m))) {
        found = true;
        break;
      }
    }
    if (found) continue;
    if (detail::permanently_refutes<B>(probe, y, bound)) {
      return ProbeResult::refuted(n, y.constant_value() ? 0 : bound);
    }
    exhausted = true;
  }
  if (exhausted) return ProbeResult::inconclusive(budget);
  return ProbeResult::confirmed_up_to(budget);
}

template <class B>
bool probe_equal(const Chain<B>& x, const Chain<B>& y, std::size_t budget) {
  return leq_probe(x, y, budget).confirmed() && leq_probe(y, x, budget).confirmed();
}

// Membership of x in the basic Scott-open set above b. Unlike leq_probe,
// a confirmation here is a genuine semi-decision: b way below some level
// settles membership outright.
template <class B>
ProbeResult basic_open_member(const typename B::Element& b, const Chain<B>& x,
                              std::size_t budget) {
  for (std::size_t n = 0; n <= budget; ++n) {
    if (B::way_below(b, x.at(n))) return ProbeResult::confirmed_up_to(n);
  }
  if (detail::permanently_refutes<B>(b, x, budget)) {
    return ProbeResult::refuted(budget, budget);
  }
  return ProbeResult::inconclusive(budget);
}

enum class SupMode {
  // d_k = sup of the k-th approximants of all chain elements with indices
  // up to k; works on any bounded complete base.
  general,
  // d_k = sup of the k-th levels of the first k+1 chains; valid only when
  // consistency on the base is continuous.
  continuous_consistency,
};

// Supremum of an increasing sequence of chains, produced lazily. Levelwise
// inconsistency means the input family was not a chain and is a hard error.
template <class B>
Chain<B> sup_increasing(std::function<Chain<B>(std::size_t)> chains, SupMode mode) {
  if (mode == SupMode::general) {
    return Chain<B>(
        [chains](std::size_t k) {
          std::vector<typename B::Element> parts;
          parts.reserve((k + 1) * (k + 1));
          for (std::size_t n = 0; n <= k; ++n) {
            Chain<B> cn = chains(n);
            for (std::size_t m = 0; m <= k; ++m) {
              parts.push_back(B::approx(cn.at(m), k));
            }
          }
          if (!B::consistent(parts)) {
            throw ConsistencyError("sup_increasing: level " + std::to_string(k) +
                                   " inconsistent; input is not a chain of chains");
          }
          return B::sup(parts);
        },
        Chain<B>::Checked::monotone);
  }
  return Chain<B>(
      [chains](std::size_t k) {
        std::vector<typename B::Element> parts;
        parts.reserve(k + 1);
        for (std::size_t n = 0; n <= k; ++n) parts.push_back(chains(n).at(k));
        if (!B::consistent(parts)) {
          throw ConsistencyError("sup_increasing: level " + std::to_string(k) +
                                 " inconsistent; input is not a chain of chains");
        }
        return B::sup(parts);
      },
      Chain<B>::Checked::monotone);
}

// Pointwise supremum of a finite consistent set of chains.
template <class B>
Chain<B> sup_finite(std::vector<Chain<B>> xs) {
  if (xs.empty()) throw DomainError("sup_finite: empty set of chains");
  return Chain<B>(
      [xs](std::size_t n) {
        std::vector<typename B::Element> level;
        level.reserve(xs.size());
        for (const Chain<B>& x : xs) level.push_back(x.at(n));
        if (!B::consistent(level)) {
          throw ConsistencyError("sup_finite: inconsistent at level " + std::to_string(n));
        }
        return B::sup(level);
      },
      Chain<B>::Checked::monotone);
}

}  // namespace ireal::completion

#endif
