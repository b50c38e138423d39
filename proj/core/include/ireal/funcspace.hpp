#ifndef IREAL_FUNCSPACE_HPP
#define IREAL_FUNCSPACE_HPP

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "ireal/base.hpp"
#include "ireal/bases.hpp"
#include "ireal/chain.hpp"
#include "ireal/completion.hpp"
#include "ireal/errors.hpp"
#include "ireal/reals.hpp"

namespace ireal::funcspace {

// Order decisions and subset-based validation are exponential in the number
// of single steps; beyond this cap they refuse to run.
inline constexpr std::size_t kStepSizeCap = 12;

template <class B, class C>
struct SingleStep {
  typename B::Element guard;
  typename C::Element value;
};

namespace detail {

// Cons(guards_J) -> Cons(values_J) for every nonempty J. When consistency on
// both bases is determined by pairs, checking pairs is exact and avoids the
// subset enumeration.
template <class B, class C>
void check_consistency_implication(const std::vector<SingleStep<B, C>>& steps) {
  const std::size_t n = steps.size();
  if constexpr (PairwiseConsistentBase<B> && PairwiseConsistentBase<C>) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<typename B::Element> guards{steps[i].guard, steps[j].guard};
        if (!B::consistent(guards)) continue;
        std::vector<typename C::Element> values{steps[i].value, steps[j].value};
        if (!C::consistent(values)) {
          throw ConsistencyError("step function violates consistency implication at steps {" +
                                 std::to_string(i) + ", " + std::to_string(j) + "}");
        }
      }
    }
    return;
  } else {
    if (n > kStepSizeCap) {
      throw DomainError("step function too large for subset validation (cap " +
                        std::to_string(kStepSizeCap) + ")");
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<typename B::Element> guards;
      std::vector<typename C::Element> values;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) {
          guards.push_back(steps[i].guard);
          values.push_back(steps[i].value);
        }
      }
      if (B::consistent(guards) && !C::consistent(values)) {
        std::string subset;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (std::size_t{1} << i)) subset += (subset.empty() ? "" : ", ") + std::to_string(i);
        }
        throw ConsistencyError("step function violates consistency implication at steps {" +
                               subset + "}");
      }
    }
  }
}

}  // namespace detail

// A finite join of single steps, subject to the guard-to-value consistency
// implication. Values are immutable and cheap to copy; large instances built
// by chain constructions share storage behind the Impl indirection.
template <class B, class C>
class StepFunction {
 public:
  using Step = SingleStep<B, C>;

  struct Impl {
    virtual ~Impl() = default;
    virtual std::size_t size() const = 0;
    virtual Step step(std::size_t i) const = 0;
    virtual void collect_fired(const typename B::Element& x,
                               std::vector<typename C::Element>& out) const = 0;
  };

  StepFunction() : impl_(std::make_shared<VectorImpl>(std::vector<Step>{})) {}
  explicit StepFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  // Checks the consistency implication; throws ConsistencyError naming the
  // violating subset.
  static StepFunction validated(std::vector<Step> steps) {
    detail::check_consistency_implication<B, C>(steps);
    return StepFunction(std::make_shared<VectorImpl>(std::move(steps)));
  }

  // For construction sites that have already established validity.
  static StepFunction unchecked(std::vector<Step> steps) {
    return StepFunction(std::make_shared<VectorImpl>(std::move(steps)));
  }

  std::size_t size() const { return impl_->size(); }
  Step step(std::size_t i) const { return impl_->step(i); }

  // sup of the values whose guards lie way below x; bottom when none fire.
  std::optional<typename C::Element> eval(const typename B::Element& x) const {
    std::vector<typename C::Element> fired;
    impl_->collect_fired(x, fired);
    if (fired.empty()) return std::nullopt;
    if (!C::consistent(fired)) {
      throw ConsistencyError("step function fired inconsistent values; an invalid instance "
                             "bypassed construction checks");
    }
    return C::sup(fired);
  }

 private:
  struct VectorImpl final : Impl {
    std::vector<Step> steps;
    explicit VectorImpl(std::vector<Step> s) : steps(std::move(s)) {}
    std::size_t size() const override { return steps.size(); }
    Step step(std::size_t i) const override { return steps.at(i); }
    void collect_fired(const typename B::Element& x,
                       std::vector<typename C::Element>& out) const override {
      for (const Step& s : steps) {
        if (B::way_below(s.guard, x)) out.push_back(s.value);
      }
    }
  };

  std::shared_ptr<const Impl> impl_;
};

template <class B, class C>
std::optional<typename C::Element> eval_single(const SingleStep<B, C>& s,
                                               const typename B::Element& x) {
  if (B::way_below(s.guard, x)) return s.value;
  return std::nullopt;
}

template <class B, class C>
std::optional<typename C::Element> eval_step(const StepFunction<B, C>& s,
                                             const typename B::Element& x) {
  return s.eval(x);
}

// Decides s ⊑ t. A single step a↘b lies below t exactly when, for every
// subset I0 of t's steps such that {a} together with the I0-guards is
// separated from the remaining guards, b is below the sup of the I0-values.
// An empty separated I0 leaves b below bottom, which is impossible.
template <class B, class C>
  requires SeparatedBase<B>
bool step_leq(const StepFunction<B, C>& s, const StepFunction<B, C>& t) {
  const std::size_t tn = t.size();
  if (tn > kStepSizeCap) {
    throw DomainError("step_leq: right side exceeds the size cap");
  }
  std::vector<SingleStep<B, C>> tsteps;
  tsteps.reserve(tn);
  for (std::size_t i = 0; i < tn; ++i) tsteps.push_back(t.step(i));

  for (std::size_t si = 0; si < s.size(); ++si) {
    const SingleStep<B, C> single = s.step(si);
    for (std::size_t mask = 0; mask < (std::size_t{1} << tn); ++mask) {
      std::vector<typename B::Element> a{single.guard};
      std::vector<typename B::Element> d;
      std::vector<typename C::Element> values;
      for (std::size_t i = 0; i < tn; ++i) {
        if (mask & (std::size_t{1} << i)) {
          a.push_back(tsteps[i].guard);
          values.push_back(tsteps[i].value);
        } else {
          d.push_back(tsteps[i].guard);
        }
      }
      if (!B::separated(a, d)) continue;
      if (values.empty()) return false;
      if (!C::leq(single.value, C::sup(values))) return false;
    }
  }
  return true;
}

// The n-th element of the canonical approximating sequence of s: guards are
// the first n+1 enumerated base elements, values the n-th approximants of
// what s yields there. Guards where s yields bottom contribute nothing and
// are dropped.
template <class B, class C>
StepFunction<B, C> approx_step(const StepFunction<B, C>& s, std::size_t n) {
  std::vector<SingleStep<B, C>> steps;
  for (std::size_t i = 0; i <= n; ++i) {
    typename B::Element guard = B::enumerate(Integer(i));
    std::optional<typename C::Element> value = s.eval(guard);
    if (value) steps.push_back({std::move(guard), C::approx(*value, n)});
  }
  return StepFunction<B, C>::validated(std::move(steps));
}

// Minimal base view of the step-function space: enough order structure for
// chains of step functions. The full way-below relation of the function
// space is not decidable from this interface and is not provided.
template <class B, class C>
struct StepFnBase {
  using Element = StepFunction<B, C>;
  static bool leq(const Element& a, const Element& b) { return step_leq(a, b); }
};

template <class B, class C>
using FunctionChain = Chain<StepFnBase<B, C>>;

// The canonical chain of step functions representing a monotone
// f : IQ -> completion(IQ); level n joins the first n+1 enumerated guards
// with the n-th levels of their images. Monotonicity of f is spot-checked on
// enumerated pairs; a refuted probe is reported as an error. Levels share
// one lazily grown table, so deep evaluation stays linear in space.
FunctionChain<IqBase, IqBase> from_base_function(
    std::function<Chain<IqBase>(const IntervalQ&)> f);

// Diagonal application: level k evaluates the k-th step function at the k-th
// input level. Lands in the lifting of C because early levels may fire
// nothing. Increasing because both arguments are; the trust lets callers
// probe deep levels without materialising every predecessor.
template <class B, class C>
Chain<LiftedBase<C>> apply(const FunctionChain<B, C>& F, const Chain<B>& x) {
  return Chain<LiftedBase<C>>(
      [F, x](std::size_t k) -> typename LiftedBase<C>::Element {
        auto value = F.at(k).eval(x.at(k));
        if (!value) return std::nullopt;
        return typename LiftedBase<C>::Element(std::move(*value));
      },
      Chain<LiftedBase<C>>::Checked::trusted);
}

// A defined level of width at most 2^-k, located by doubling the probed
// index (not necessarily the first such level).
IntervalQ refine_lifted(const Chain<LiftedIq>& x, std::size_t k, std::size_t budget);

// Output tolerance per input interval; must be strictly positive wherever
// the interval has positive length.
struct NondiscontinuityModulus {
  std::function<Rational(const IntervalQ&)> omega;
};

// The step-function chain extending a real function given only on rational
// midpoints: level n joins every enumerated interval guard of positive
// length with index at most n, sending it to the n-th level of f at its
// midpoint, widened by the modulus. Each level is validated as it is
// produced; a consistency failure convicts the modulus and is reported.
FunctionChain<IqBase, IqBase> extend_nondiscontinuous(
    std::function<reals::Real(const Rational&)> f, NondiscontinuityModulus modulus);

}  // namespace ireal::funcspace

#endif
