#include "ireal/newton.hpp"

#include <memory>
#include <mutex>

#include "ireal/errors.hpp"

namespace ireal::newton {

namespace {

struct Iterates {
  Rational q;
  std::vector<Rational> uppers;  // uppers[n] = upper(n)
  std::mutex mutex;

  explicit Iterates(Rational value) : q(std::move(value)) {}

  IntervalQ at(std::size_t n) {
    std::scoped_lock lock(mutex);
    if (uppers.empty()) {
      uppers.push_back((Rational(1) + q) * Rational(1, 2));  // seed upper(-1) = 1
    }
    while (uppers.size() <= n) {
      const Rational& prev = uppers.back();
      uppers.push_back((prev + q / prev) * Rational(1, 2));
    }
    const Rational& upper = uppers[n];
    return IntervalQ(q / upper, upper);
  }
};

}  // namespace

reals::Real sqrt(const Rational& q) {
  if (q.sign() <= 0) throw DomainError("sqrt requires q > 0");
  auto iterates = std::make_shared<Iterates>(q);
  Chain<IqBase> chain([iterates](std::size_t n) { return iterates->at(n); },
                      Chain<IqBase>::Checked::monotone);
  IntervalQ first = chain.at(0);
  const Rational initial_width = interval::length(first);
  reals::Real::WidthHint hint = [initial_width](std::size_t k) -> std::size_t {
    if (initial_width.is_zero()) return 0;
    // smallest n with initial_width * 2^-n <= 2^-k
    std::int64_t n = static_cast<std::int64_t>(k) + ceil_log2(initial_width);
    return n <= 0 ? 0 : static_cast<std::size_t>(n);
  };
  return reals::Real(std::move(chain), hint);
}

std::vector<SqrtTableRow> sqrt_table(const Rational& q, std::size_t iters) {
  reals::Real root = sqrt(q);
  const Rational initial_width = interval::length(root.at(0));
  std::vector<SqrtTableRow> rows;
  rows.reserve(iters);
  for (std::size_t n = 1; n <= iters; ++n) {
    IntervalQ level = root.at(n);
    rows.push_back(SqrtTableRow{
        n,
        level.lo,
        level.hi,
        interval::length(level),
        initial_width / pow2(static_cast<std::int64_t>(n)),
    });
  }
  return rows;
}

}  // namespace ireal::newton
