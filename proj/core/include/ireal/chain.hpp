#ifndef IREAL_CHAIN_HPP
#define IREAL_CHAIN_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ireal/base.hpp"
#include "ireal/errors.hpp"

namespace ireal {

// A lazily evaluated increasing sequence of base elements, the raw material
// of a continuous completion. The generator must be a pure function of the
// index; computed values are memoized behind a lock, so a chain can be
// shared across threads and always replays equal values.
//
// Monotonicity is validated as elements are produced, which forces levels to
// be computed in order; a violation is a hard ChainError. Constructions that
// are increasing by design may opt out with Checked::trusted, which also
// lets single levels be computed without their predecessors.
template <class B>
class Chain {
 public:
  using Element = typename B::Element;
  using Generator = std::function<Element(std::size_t)>;

  enum class Checked { monotone, trusted };

  explicit Chain(Generator gen, Checked mode = Checked::monotone)
      : state_(std::make_shared<State>()) {
    state_->gen = std::move(gen);
    state_->check = mode == Checked::monotone;
  }

  // The constant chain (b)_n.
  static Chain constant(Element b) {
    Chain c([b](std::size_t) { return b; }, Checked::trusted);
    c.state_->constant = std::move(b);
    return c;
  }

  Element at(std::size_t n) const {
    State& st = *state_;
    if (st.constant) return *st.constant;  // set once at construction
    std::scoped_lock lock(st.mutex);
    if (st.check) {
      while (st.prefix.size() <= n) {
        std::size_t k = st.prefix.size();
        Element next = st.gen(k);
        if (k > 0 && !B::leq(st.prefix.back(), next)) {
          throw ChainError("chain not increasing at index " + std::to_string(k));
        }
        st.prefix.push_back(std::move(next));
      }
      return st.prefix[n];
    }
    auto it = st.sparse.find(n);
    if (it == st.sparse.end()) {
      it = st.sparse.emplace(n, st.gen(n)).first;
    }
    return it->second;
  }

  // Set when the chain is known to repeat one element forever; probes use
  // this to turn failures against the element into permanent refutations.
  const std::optional<Element>& constant_value() const { return state_->constant; }

 private:
  struct State {
    Generator gen;
    std::vector<Element> prefix;         // checked chains fill in order
    std::map<std::size_t, Element> sparse;  // trusted chains fill on demand
    std::optional<Element> constant;
    bool check = true;
    mutable std::mutex mutex;
  };
  std::shared_ptr<State> state_;
};

}  // namespace ireal

#endif
