#include "ireal/funcspace.hpp"

namespace ireal::funcspace {

IntervalQ refine_lifted(const Chain<LiftedIq>& x, std::size_t k, std::size_t budget) {
  const Rational target = pow2(-static_cast<std::int64_t>(k));
  // Widths along a chain never grow, so a doubling scan finds a sufficient
  // level while touching only logarithmically many (evaluating a level of a
  // step-function chain costs work linear in its index).
  std::size_t n = 0;
  for (;;) {
    LiftedIq::Element level = x.at(n);
    if (level && interval::length(*level) <= target) return *level;
    if (n >= budget) break;
    n = std::min(budget, n == 0 ? 1 : 2 * n);
  }
  throw BudgetError("refine_lifted: no defined level of width <= 2^-" + std::to_string(k) +
                    " within " + std::to_string(budget) + " steps");
}

namespace {

// Both step-function chain constructions assign each enumerated guard an
// image chain and a symmetric widening, and read level n as
//   guard_i -> widen(image_i.at(n), omega_i)   for usable i <= n.
// Levels are views into one lazily grown table, so deep chains stay linear
// in space, and values are only materialised for guards that fire.
struct Entry {
  IntervalQ guard;
  Rational omega;
  Chain<IqBase> image;
  std::optional<IntervalQ> stable;  // precomputed value when the image is constant
};

IntervalQ entry_value(const Entry& e, std::size_t level) {
  if (e.stable) return *e.stable;
  return interval::extend(e.image.at(level), e.omega);
}

struct TableState {
  std::function<std::optional<Entry>(std::size_t, IntervalQ)> factory;
  std::string label;
  bool spot_check_monotone = false;

  // Entries and positions only grow, and only under the generator, which the
  // owning chain invokes sequentially; readers take the shared lock.
  mutable std::shared_mutex mutex;
  std::deque<std::optional<Entry>> entries;  // slot per enumeration index
  std::vector<std::size_t> positions;        // indices of usable guards, ascending

  // Validation bookkeeping, touched only by the generator. Pair validity is
  // a property of the value pair, so verdicts survive arbitrary level jumps:
  // a pair is rechecked exactly when one of its values has changed since the
  // last validated level.
  std::vector<std::optional<IntervalQ>> prev_values;  // aligned with positions
  std::size_t baselined = 0;                          // positions already validated once
  std::size_t monotone_checked = 0;                   // enumeration head already probed

  void ensure_entries(std::size_t n) {
    std::unique_lock lock(mutex);
    while (entries.size() <= n) {
      const std::size_t idx = entries.size();
      std::optional<Entry> entry = factory(idx, IqBase::enumerate(Integer(idx)));
      if (entry) positions.push_back(idx);
      entries.emplace_back(std::move(entry));
    }
  }

  // Probes image monotonicity on pairs drawn from the enumeration head; a
  // refuted probe convicts the supplied function.
  void spot_check(std::size_t n) {
    constexpr std::size_t kPairLimit = 8;
    constexpr std::size_t kProbeBudget = 3;
    const std::size_t limit = std::min(n, kPairLimit);
    if (limit < monotone_checked) return;
    auto probe_pair = [&](const Entry& lo, const Entry& hi) {
      if (!interval::leq(lo.guard, hi.guard)) return;
      if (completion::leq_probe(lo.image, hi.image, kProbeBudget).is_refuted()) {
        throw DomainError(label + ": images refute monotonicity between guards " +
                          interval::to_string(lo.guard) + " and " +
                          interval::to_string(hi.guard));
      }
    };
    for (std::size_t j = monotone_checked; j <= limit; ++j) {
      if (!entries[j]) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (!entries[i]) continue;
        probe_pair(*entries[i], *entries[j]);
        probe_pair(*entries[j], *entries[i]);
      }
    }
    monotone_checked = limit + 1;
  }

  // Revalidates the consistency implication at this level: entries never
  // baselined before against everything, plus every entry whose value
  // deepened since its last validation.
  void validate_level(std::size_t n) {
    std::vector<std::size_t> to_check;
    std::size_t live = 0;
    while (live < positions.size() && positions[live] <= n) ++live;
    for (std::size_t k = 0; k < live; ++k) {
      const Entry& e = *entries[positions[k]];
      if (k >= baselined) {
        to_check.push_back(k);
        if (!e.stable) {
          if (prev_values.size() <= k) prev_values.resize(k + 1);
          prev_values[k] = entry_value(e, n);
        }
        continue;
      }
      if (e.stable) continue;
      IntervalQ now = entry_value(e, n);
      if (!prev_values[k] || !(*prev_values[k] == now)) {
        prev_values[k] = now;
        to_check.push_back(k);
      }
    }
    baselined = std::max(baselined, live);
    for (std::size_t k : to_check) {
      const Entry& a = *entries[positions[k]];
      const IntervalQ va = entry_value(a, n);
      for (std::size_t j = 0; j < live; ++j) {
        if (j == k) continue;
        const Entry& b = *entries[positions[j]];
        if (a.guard.hi < b.guard.lo || b.guard.hi < a.guard.lo) continue;  // guards disjoint
        IntervalQ vb_store;
        const IntervalQ* vb = &vb_store;
        if (b.stable) {
          vb = &*b.stable;
        } else {
          vb_store = entry_value(b, n);
        }
        if (va.hi < vb->lo || vb->hi < va.lo) {
          throw ConsistencyError(label + ": values inconsistent at level " + std::to_string(n) +
                                 " between guards " + interval::to_string(a.guard) + " and " +
                                 interval::to_string(b.guard));
        }
      }
    }
  }
};

struct LevelImpl final : StepFunction<IqBase, IqBase>::Impl {
  std::shared_ptr<TableState> state;
  std::size_t level;
  std::size_t count;  // usable guards with enumeration index <= level

  LevelImpl(std::shared_ptr<TableState> st, std::size_t lvl, std::size_t cnt)
      : state(std::move(st)), level(lvl), count(cnt) {}

  std::size_t size() const override { return count; }

  SingleStep<IqBase, IqBase> step(std::size_t i) const override {
    std::shared_lock lock(state->mutex);
    const Entry& e = *state->entries[state->positions.at(i)];
    return {e.guard, entry_value(e, level)};
  }

  void collect_fired(const IntervalQ& x, std::vector<IntervalQ>& out) const override {
    std::shared_lock lock(state->mutex);
    for (std::size_t k = 0; k < count; ++k) {
      const Entry& e = *state->entries[state->positions[k]];
      if (interval::way_below(e.guard, x)) out.push_back(entry_value(e, level));
    }
  }
};

FunctionChain<IqBase, IqBase> table_chain(std::shared_ptr<TableState> st) {
  auto gen = [st](std::size_t n) {
    st->ensure_entries(n);
    if (st->spot_check_monotone) st->spot_check(n);
    st->validate_level(n);
    std::size_t count = 0;
    while (count < st->positions.size() && st->positions[count] <= n) ++count;
    return StepFunction<IqBase, IqBase>(std::make_shared<LevelImpl>(st, n, count));
  };
  using FC = FunctionChain<IqBase, IqBase>;
  return FC(gen, FC::Checked::trusted);
}

std::optional<IntervalQ> constant_of(const Chain<IqBase>& image, const Rational& omega) {
  if (!image.constant_value()) return std::nullopt;
  return interval::extend(*image.constant_value(), omega);
}

}  // namespace

FunctionChain<IqBase, IqBase> from_base_function(
    std::function<Chain<IqBase>(const IntervalQ&)> f) {
  auto st = std::make_shared<TableState>();
  st->label = "from_base_function";
  st->spot_check_monotone = true;
  st->factory = [f](std::size_t, IntervalQ guard) -> std::optional<Entry> {
    Chain<IqBase> image = f(guard);
    std::optional<IntervalQ> stable = constant_of(image, Rational(0));
    return Entry{std::move(guard), Rational(0), std::move(image), std::move(stable)};
  };
  return table_chain(std::move(st));
}

FunctionChain<IqBase, IqBase> extend_nondiscontinuous(
    std::function<reals::Real(const Rational&)> f, NondiscontinuityModulus modulus) {
  auto st = std::make_shared<TableState>();
  st->label = "extend_nondiscontinuous";
  auto omega = std::move(modulus.omega);
  st->factory = [f, omega](std::size_t, IntervalQ guard) -> std::optional<Entry> {
    if (interval::length(guard).is_zero()) {
      return std::nullopt;  // singleton guards fire on nothing useful
    }
    Rational om = omega(guard);
    if (om.sign() <= 0) {
      throw DomainError("extend_nondiscontinuous: modulus not strictly positive on " +
                        interval::to_string(guard));
    }
    Rational mid = (guard.lo + guard.hi) * Rational(1, 2);
    Chain<IqBase> image = f(mid).chain();
    std::optional<IntervalQ> stable = constant_of(image, om);
    return Entry{std::move(guard), std::move(om), std::move(image), std::move(stable)};
  };
  return table_chain(std::move(st));
}

}  // namespace ireal::funcspace
