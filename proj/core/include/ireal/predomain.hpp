#ifndef IREAL_PREDOMAIN_HPP
#define IREAL_PREDOMAIN_HPP

#include <functional>
#include <utility>
#include <vector>

#include "ireal/base.hpp"
#include "ireal/errors.hpp"

namespace ireal::predomain {

// Checks that finite suprema preserve way-below: given pairs (b_i, b_i')
// with b_i ≪ b_i', returns way_below(sup b_i, sup b_i'). Always true on
// valid input; exposed so the law is directly testable.
template <class B>
bool sup_preserves_waybelow_check(
    const std::vector<std::pair<typename B::Element, typename B::Element>>& pairs) {
  if (pairs.empty()) throw DomainError("sup_preserves_waybelow_check: empty list");
  std::vector<typename B::Element> lhs, rhs;
  for (const auto& [b, b2] : pairs) {
    if (!B::way_below(b, b2)) {
      throw DomainError("sup_preserves_waybelow_check: pair violates way_below");
    }
    lhs.push_back(b);
    rhs.push_back(b2);
  }
  if (!B::consistent(lhs) || !B::consistent(rhs)) {
    throw ConsistencyError("sup_preserves_waybelow_check: inconsistent side");
  }
  return B::way_below(B::sup(lhs), B::sup(rhs));
}

// Interpolant y with b ≪ y ≪ c, via the base's registered strategy.
template <class B>
  requires InterpolatingBase<B>
typename B::Element interpolate(const typename B::Element& b, const typename B::Element& c) {
  if (!B::way_below(b, c)) throw DomainError("interpolate: precondition b \xe2\x89\xaa c fails");
  return B::interpolate(b, c);
}

// Common interpolant below c for finitely many b_i ≪ c: the supremum of the
// pairwise interpolants.
template <class B>
  requires InterpolatingBase<B>
typename B::Element interpolate_multi(const std::vector<typename B::Element>& bs,
                                      const typename B::Element& c) {
  if (bs.empty()) throw DomainError("interpolate_multi: empty list");
  std::vector<typename B::Element> interpolants;
  interpolants.reserve(bs.size());
  for (const auto& b : bs) interpolants.push_back(interpolate<B>(b, c));
  if (!B::consistent(interpolants)) {
    throw ConsistencyError("interpolate_multi: interpolants inconsistent");
  }
  return B::sup(interpolants);
}

// Supremum of the diagonal of a monotone grid, asserting agreement with the
// iterated supremum. Monotonicity is verified on the probed square.
template <class B>
typename B::Element diagonal_sup(
    const std::function<typename B::Element(std::size_t, std::size_t)>& f,
    std::size_t depth) {
  for (std::size_t n = 0; n <= depth; ++n) {
    for (std::size_t m = 0; m <= depth; ++m) {
      if (n < depth && !B::leq(f(n, m), f(n + 1, m))) {
        throw DomainError("diagonal_sup: grid not monotone in first argument at (" +
                          std::to_string(n) + ", " + std::to_string(m) + ")");
      }
      if (m < depth && !B::leq(f(n, m), f(n, m + 1))) {
        throw DomainError("diagonal_sup: grid not monotone in second argument at (" +
                          std::to_string(n) + ", " + std::to_string(m) + ")");
      }
    }
  }
  std::vector<typename B::Element> diagonal;
  for (std::size_t n = 0; n <= depth; ++n) diagonal.push_back(f(n, n));
  if (!B::consistent(diagonal)) {
    throw ConsistencyError("diagonal_sup: diagonal inconsistent");
  }
  typename B::Element diag = B::sup(diagonal);

  std::vector<typename B::Element> columns;
  for (std::size_t m = 0; m <= depth; ++m) {
    std::vector<typename B::Element> column;
    for (std::size_t n = 0; n <= depth; ++n) column.push_back(f(n, m));
    columns.push_back(B::sup(column));
  }
  typename B::Element iterated = B::sup(columns);
  if (!(diag == iterated)) {
    throw Error("diagonal_sup: diagonal and iterated suprema differ");
  }
  return diag;
}

}  // namespace ireal::predomain

#endif
