#include <benchmark/benchmark.h>

#include "ireal/completion.hpp"
#include "ireal/funcspace.hpp"
#include "ireal/newton.hpp"
#include "ireal/reals.hpp"

using namespace ireal;

namespace {

void BM_RationalAdd(benchmark::State& state) {
  Rational a(17, 12), b(-24, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a + b);
  }
}
BENCHMARK(BM_RationalAdd);

void BM_WayBelow(benchmark::State& state) {
  IntervalQ a(Rational(-331, 64), Rational(417, 32));
  IntervalQ b(Rational(-7, 3), Rational(41, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(interval::way_below(a, b));
  }
}
BENCHMARK(BM_WayBelow);

void BM_NewtonIterates(benchmark::State& state) {
  const auto iters = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    reals::Real root = newton::sqrt(Rational(2));
    benchmark::DoNotOptimize(root.at(iters));
  }
}
BENCHMARK(BM_NewtonIterates)->Arg(5)->Arg(10)->Arg(15);

void BM_RefineSqrt(benchmark::State& state) {
  const auto bits = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    reals::Real root = newton::sqrt(Rational(2));
    benchmark::DoNotOptimize(reals::refine(root, bits, 4 * bits + 64));
  }
}
BENCHMARK(BM_RefineSqrt)->Arg(30)->Arg(100);

void BM_LeqProbe(benchmark::State& state) {
  Chain<IqBase> x([](std::size_t n) {
    Rational p = pow2(-static_cast<std::int64_t>(n));
    return IntervalQ(Rational(1) - p, Rational(1) + p);
  });
  Chain<IqBase> wide = completion::embed<IqBase>(IntervalQ(Rational(0), Rational(2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(completion::leq_probe(wide, x, 10));
  }
}
BENCHMARK(BM_LeqProbe);

void BM_EvalStep(benchmark::State& state) {
  using SF = funcspace::StepFunction<IqBase, IqBase>;
  std::vector<funcspace::SingleStep<IqBase, IqBase>> steps;
  for (int i = 0; i < 10; ++i) {
    Rational c(i - 5);
    steps.push_back({IntervalQ(c - Rational(6), c + Rational(6)),
                     IntervalQ(Rational(-10 - i, 10), Rational(10 + i, 10))});
  }
  SF f = SF::validated(std::move(steps));
  IntervalQ x(Rational(-1, 3), Rational(1, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval(x));
  }
}
BENCHMARK(BM_EvalStep);

void BM_StepLeq(benchmark::State& state) {
  using SF = funcspace::StepFunction<IqBase, IqBase>;
  SF s = SF::validated({{IntervalQ(Rational(0), Rational(4)), IntervalQ(Rational(1), Rational(3))}});
  std::vector<funcspace::SingleStep<IqBase, IqBase>> steps;
  for (int i = 0; i < 8; ++i) {
    steps.push_back({IntervalQ(Rational(-i - 1), Rational(i + 4)),
                     IntervalQ(Rational(1), Rational(3 + i))});
  }
  SF t = SF::validated(std::move(steps));
  for (auto _ : state) {
    benchmark::DoNotOptimize(funcspace::step_leq(s, t));
  }
}
BENCHMARK(BM_StepLeq);

}  // namespace

BENCHMARK_MAIN();
