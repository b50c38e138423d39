#ifndef IREAL_BASES_HPP
#define IREAL_BASES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ireal/base.hpp"
#include "ireal/errors.hpp"
#include "ireal/interval.hpp"

namespace ireal {

// Discrete base over the naturals: order is equality, everything approximates
// itself.
struct NatFlat {
  using Element = std::uint64_t;
  static constexpr bool pairwise_consistency = true;

  static bool leq(Element a, Element b) { return a == b; }
  static bool way_below(Element a, Element b) { return a == b; }
  static Element approx(Element b, std::size_t) { return b; }
  static Element enumerate(const Integer& i) { return i.convert_to<Element>(); }
  static Integer index_of(Element b) { return Integer(b); }
  static bool consistent(std::span<const Element> set) {
    if (set.empty()) throw DomainError("consistent: empty set");
    for (Element e : set)
      if (e != set[0]) return false;
    return true;
  }
  static Element sup(std::span<const Element> set) {
    if (!consistent(set)) throw ConsistencyError("sup of distinct flat elements");
    return set[0];
  }
  static Element interpolate(Element a, Element b) {
    if (a != b) throw DomainError("flat interpolate requires equal elements");
    return a;
  }
  static std::optional<Element> separated(std::span<const Element> a,
                                          std::span<const Element> d) {
    if (a.empty()) throw DomainError("separated: A must be nonempty");
    if (!consistent(a)) return std::nullopt;
    for (Element e : d)
      if (e == a[0]) return std::nullopt;
    return a[0];
  }
};

// Discrete base over a finite alphabet {0, ..., N-1}.
template <unsigned N>
struct FiniteFlat {
  static_assert(N >= 1);
  using Element = unsigned;
  static constexpr bool pairwise_consistency = true;
  static constexpr unsigned cardinality = N;

  static bool leq(Element a, Element b) { return a == b; }
  static bool way_below(Element a, Element b) { return a == b; }
  static Element approx(Element b, std::size_t) { return b; }
  static Element enumerate(const Integer& i) { return (i % N).template convert_to<Element>(); }
  static Integer index_of(Element b) { return Integer(b % N); }
  static bool consistent(std::span<const Element> set) {
    if (set.empty()) throw DomainError("consistent: empty set");
    for (Element e : set)
      if (e != set[0]) return false;
    return true;
  }
  static Element sup(std::span<const Element> set) {
    if (!consistent(set)) throw ConsistencyError("sup of distinct flat elements");
    return set[0];
  }
  static Element interpolate(Element a, Element b) {
    if (a != b) throw DomainError("flat interpolate requires equal elements");
    return a;
  }
};

// Finite sequences over a finite alphabet, under the prefix order. Way-below
// coincides with the order; the empty sequence is bottom. Enumeration is
// length-then-lexicographic.
template <class A>
struct SeqBase {
  using Element = std::vector<typename A::Element>;
  static constexpr bool pairwise_consistency = true;
  static constexpr unsigned radix = A::cardinality;

  static bool is_prefix(const Element& a, const Element& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
  }
  static bool leq(const Element& a, const Element& b) { return is_prefix(a, b); }
  static bool way_below(const Element& a, const Element& b) { return is_prefix(a, b); }
  static Element approx(const Element& b, std::size_t) { return b; }
  static Element bottom() { return {}; }

  static bool consistent(std::span<const Element> set) {
    if (set.empty()) throw DomainError("consistent: empty set");
    const Element* longest = &set[0];
    for (const Element& e : set)
      if (e.size() > longest->size()) longest = &e;
    for (const Element& e : set)
      if (!is_prefix(e, *longest)) return false;
    return true;
  }
  static Element sup(std::span<const Element> set) {
    if (!consistent(set)) throw ConsistencyError("sup of prefix-incomparable sequences");
    const Element* longest = &set[0];
    for (const Element& e : set)
      if (e.size() > longest->size()) longest = &e;
    return *longest;
  }
  static Element interpolate(const Element& a, const Element& c) {
    if (!way_below(a, c)) throw DomainError("interpolate requires a \xe2\x89\xaa c");
    return c;
  }

  static Element enumerate(const Integer& index) {
    Integer i = index;
    std::size_t len = 0;
    Integer block = 1;  // radix^len
    while (i >= block) {
      i -= block;
      block *= radix;
      ++len;
    }
    Element out(len);
    for (std::size_t k = len; k-- > 0;) {
      out[k] = A::enumerate(i % radix);
      i /= radix;
    }
    return out;
  }
  static Integer index_of(const Element& b) {
    Integer base = 0;
    Integer block = 1;
    for (std::size_t k = 0; k < b.size(); ++k) {
      base += block;
      block *= radix;
    }
    Integer code = 0;
    for (const auto& sym : b) code = code * radix + A::index_of(sym);
    return base + code;
  }
};

// Pointwise product of two bases.
template <class B1, class B2>
struct ProductBase {
  using Element = std::pair<typename B1::Element, typename B2::Element>;
  static constexpr bool pairwise_consistency =
      B1::pairwise_consistency && B2::pairwise_consistency;

  static bool leq(const Element& a, const Element& b) {
    return B1::leq(a.first, b.first) && B2::leq(a.second, b.second);
  }
  static bool way_below(const Element& a, const Element& b) {
    return B1::way_below(a.first, b.first) && B2::way_below(a.second, b.second);
  }
  static Element approx(const Element& b, std::size_t i) {
    return {B1::approx(b.first, i), B2::approx(b.second, i)};
  }
  static bool consistent(std::span<const Element> set) {
    return consistent_side<B1>(set, [](const Element& e) { return e.first; }) &&
           consistent_side<B2>(set, [](const Element& e) { return e.second; });
  }
  static Element sup(std::span<const Element> set) {
    if (set.empty()) throw DomainError("sup: empty set");
    std::vector<typename B1::Element> firsts;
    std::vector<typename B2::Element> seconds;
    for (const Element& e : set) {
      firsts.push_back(e.first);
      seconds.push_back(e.second);
    }
    return {B1::sup(firsts), B2::sup(seconds)};
  }
  static Element enumerate(const Integer& index) {
    auto [i, j] = pairing::cantor_inv(index);
    return {B1::enumerate(i), B2::enumerate(j)};
  }
  static Integer index_of(const Element& b) {
    return pairing::cantor(B1::index_of(b.first), B2::index_of(b.second));
  }

  static Element bottom()
    requires PointedBase<B1> && PointedBase<B2>
  {
    return {B1::bottom(), B2::bottom()};
  }

 private:
  template <class B, class Proj>
  static bool consistent_side(std::span<const Element> set, Proj proj) {
    if (set.empty()) throw DomainError("consistent: empty set");
    std::vector<typename B::Element> side;
    for (const Element& e : set) side.push_back(proj(e));
    return B::consistent(side);
  }
};

// Co-pointwise coproduct: elements of different sides never compare.
template <class B1, class B2>
struct CoproductBase {
  using Element = std::variant<typename B1::Element, typename B2::Element>;
  static constexpr bool pairwise_consistency =
      B1::pairwise_consistency && B2::pairwise_consistency;

  static bool leq(const Element& a, const Element& b) {
    if (a.index() != b.index()) return false;
    if (a.index() == 0) return B1::leq(std::get<0>(a), std::get<0>(b));
    return B2::leq(std::get<1>(a), std::get<1>(b));
  }
  static bool way_below(const Element& a, const Element& b) {
    if (a.index() != b.index()) return false;
    if (a.index() == 0) return B1::way_below(std::get<0>(a), std::get<0>(b));
    return B2::way_below(std::get<1>(a), std::get<1>(b));
  }
  static Element approx(const Element& b, std::size_t i) {
    if (b.index() == 0) return Element(std::in_place_index<0>, B1::approx(std::get<0>(b), i));
    return Element(std::in_place_index<1>, B2::approx(std::get<1>(b), i));
  }
  static bool consistent(std::span<const Element> set) {
    if (set.empty()) throw DomainError("consistent: empty set");
    for (const Element& e : set)
      if (e.index() != set[0].index()) return false;
    if (set[0].index() == 0) {
      std::vector<typename B1::Element> side;
      for (const Element& e : set) side.push_back(std::get<0>(e));
      return B1::consistent(side);
    }
    std::vector<typename B2::Element> side;
    for (const Element& e : set) side.push_back(std::get<1>(e));
    return B2::consistent(side);
  }
  static Element sup(std::span<const Element> set) {
    if (!consistent(set)) throw ConsistencyError("sup across coproduct sides");
    if (set[0].index() == 0) {
      std::vector<typename B1::Element> side;
      for (const Element& e : set) side.push_back(std::get<0>(e));
      return Element(std::in_place_index<0>, B1::sup(side));
    }
    std::vector<typename B2::Element> side;
    for (const Element& e : set) side.push_back(std::get<1>(e));
    return Element(std::in_place_index<1>, B2::sup(side));
  }
  static Element enumerate(const Integer& index) {
    if (index % 2 == 0) return Element(std::in_place_index<0>, B1::enumerate(index / 2));
    return Element(std::in_place_index<1>, B2::enumerate((index - 1) / 2));
  }
  static Integer index_of(const Element& b) {
    if (b.index() == 0) return 2 * B1::index_of(std::get<0>(b));
    return 2 * B2::index_of(std::get<1>(b)) + 1;
  }
};

// Lifting: adds a bottom below every element of the inner base. Bottom is
// way below everything, including itself.
template <class B>
struct LiftedBase {
  using Element = std::optional<typename B::Element>;
  static constexpr bool pairwise_consistency = B::pairwise_consistency;

  static Element bottom() { return std::nullopt; }
  static Element lift(typename B::Element e) { return Element(std::move(e)); }

  static bool leq(const Element& a, const Element& b) {
    if (!a) return true;
    if (!b) return false;
    return B::leq(*a, *b);
  }
  static bool way_below(const Element& a, const Element& b) {
    if (!a) return true;
    if (!b) return false;
    return B::way_below(*a, *b);
  }
  static Element approx(const Element& b, std::size_t i) {
    if (!b) return std::nullopt;
    return Element(B::approx(*b, i));
  }
  static bool consistent(std::span<const Element> set) {
    if (set.empty()) throw DomainError("consistent: empty set");
    std::vector<typename B::Element> inner;
    for (const Element& e : set)
      if (e) inner.push_back(*e);
    return inner.empty() || B::consistent(inner);
  }
  static Element sup(std::span<const Element> set) {
    if (set.empty()) throw DomainError("sup: empty set");
    std::vector<typename B::Element> inner;
    for (const Element& e : set)
      if (e) inner.push_back(*e);
    if (inner.empty()) return std::nullopt;
    return Element(B::sup(inner));
  }
  static Element enumerate(const Integer& index) {
    if (index == 0) return std::nullopt;
    return Element(B::enumerate(index - 1));
  }
  static Integer index_of(const Element& b) {
    if (!b) return Integer(0);
    return B::index_of(*b) + 1;
  }
  static bool refutes(const Element& p, const Element& y)
    requires RefutingBase<B>
  {
    if (!p) return false;  // bottom probes always succeed
    if (!y) return false;  // y may still become defined
    return B::refutes(*p, *y);
  }
};

using LiftedIq = LiftedBase<IqBase>;

}  // namespace ireal

#endif
