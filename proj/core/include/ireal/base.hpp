#ifndef IREAL_BASE_HPP
#define IREAL_BASE_HPP

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ireal/rational.hpp"

namespace ireal {

// Countable posets of finitely representable approximants. A base is a
// stateless type: elements are values, operations are static and pure.
//
//   leq        decidable order
//   way_below  decidable approximation relation
//   approx     approx(b, i) is the i-th element of a fixed approximating
//              sequence of b: increasing in i, each way below b
//   enumerate / index_of   a surjective enumeration with inverse
//   consistent / sup       bounded-completeness interface on finite sets
template <class B>
concept PredomainBase = requires(const typename B::Element& a,
                                 const typename B::Element& b,
                                 std::span<const typename B::Element> set,
                                 const Integer& idx, std::size_t i) {
  typename B::Element;
  { B::leq(a, b) } -> std::convertible_to<bool>;
  { B::way_below(a, b) } -> std::convertible_to<bool>;
  { B::approx(a, i) } -> std::convertible_to<typename B::Element>;
  { B::enumerate(idx) } -> std::convertible_to<typename B::Element>;
  { B::index_of(a) } -> std::convertible_to<Integer>;
  { B::consistent(set) } -> std::convertible_to<bool>;
  { B::sup(set) } -> std::convertible_to<typename B::Element>;
  { a == b } -> std::convertible_to<bool>;
};

template <class B>
concept PointedBase = PredomainBase<B> && requires {
  { B::bottom() } -> std::convertible_to<typename B::Element>;
};

// Bases with a registered interpolation strategy: given a way_below c,
// produces y with a way_below y way_below c.
template <class B>
concept InterpolatingBase = PredomainBase<B> &&
    requires(const typename B::Element& a, const typename B::Element& b) {
      { B::interpolate(a, b) } -> std::convertible_to<typename B::Element>;
    };

// Bases with a permanent-failure rule for probes: refutes(p, y) means no
// later element of a chain currently at y can ever lie way above p.
template <class B>
concept RefutingBase = PredomainBase<B> &&
    requires(const typename B::Element& p, const typename B::Element& y) {
      { B::refutes(p, y) } -> std::convertible_to<bool>;
    };

// Bases with a decidable separatedness relation on finite sets, returning a
// witness w with a way_below w for all a in A and no d in D way below w.
template <class B>
concept SeparatedBase = PredomainBase<B> &&
    requires(std::span<const typename B::Element> a,
             std::span<const typename B::Element> d) {
      { B::separated(a, d) } -> std::convertible_to<std::optional<typename B::Element>>;
    };

// True when consistency of arbitrary finite sets is determined by pairs;
// lets consistency-implication checks avoid subset enumeration.
template <class B>
concept PairwiseConsistentBase = PredomainBase<B> && B::pairwise_consistency;

template <class B>
std::vector<typename B::Element> enumerate_prefix(std::size_t count) {
  std::vector<typename B::Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(B::enumerate(Integer(i)));
  return out;
}

// Standard pairing helpers used by enumerations.
namespace pairing {

inline Integer cantor(const Integer& a, const Integer& b) {
  return (a + b) * (a + b + 1) / 2 + b;
}

inline std::pair<Integer, Integer> cantor_inv(const Integer& z) {
  using boost::multiprecision::sqrt;
  Integer w = (sqrt(Integer(8) * z + 1) - 1) / 2;
  Integer t = w * (w + 1) / 2;
  Integer b = z - t;
  return {w - b, b};
}

// 0, -1, 1, -2, 2, ...
inline Integer zigzag(const Integer& n) {
  if (n % 2 == 0) return n / 2;
  return -(n + 1) / 2;
}

inline Integer zigzag_inv(const Integer& z) {
  if (z >= 0) return 2 * z;
  return -2 * z - 1;
}

}  // namespace pairing

}  // namespace ireal

#endif
