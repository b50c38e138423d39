// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its tolerances in code.

#include <array>
#include <chrono>
#include <cstdio>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ireal/bases.hpp"
#include "ireal/completion.hpp"
#include "ireal/funcspace.hpp"
#include "ireal/newton.hpp"
#include "ireal/predomain.hpp"
#include "ireal/reals.hpp"

using namespace ireal;
using completion::ProbeResult;
using reals::Real;
using IvChain = Chain<IqBase>;
using StepFn = funcspace::StepFunction<IqBase, IqBase>;
using Step = funcspace::SingleStep<IqBase, IqBase>;

namespace {

struct Failure {
  std::string message;
};

void expect(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng);
  }
  Rational rational() { return Rational(Integer(range(-256, 256)), Integer(range(1, 32))); }
  IntervalQ interval() {
    Rational p = rational(), q = rational();
    return p <= q ? IntervalQ(p, q) : IntervalQ(q, p);
  }
  IntervalQ small_interval() {
    Rational p(Integer(range(-32, 32)), Integer(range(1, 8)));
    Rational w(Integer(range(0, 16)), Integer(range(1, 8)));
    return IntervalQ(p, p + w);
  }
  IvChain chain() {
    std::vector<IntervalQ> levels;
    Rational lo = rational() - Rational(4);
    Rational hi = lo + abs(rational()) + Rational(2);
    for (int i = 0; i < 33; ++i) {
      levels.emplace_back(lo, hi);
      Rational gap = hi - lo;
      lo = lo + gap * Rational(Integer(range(0, 2)), 8);
      hi = hi - gap * Rational(Integer(range(0, 2)), 8);
    }
    return IvChain([levels](std::size_t n) { return levels[std::min<std::size_t>(n, 32)]; });
  }
  Real total() {
    Rational q = rational();
    Rational a(Integer(range(1, 32)), 32);
    Rational b(Integer(range(1, 32)), 32);
    IvChain c([q, a, b](std::size_t n) {
      Rational p = pow2(-static_cast<std::int64_t>(n));
      return IntervalQ(q - a * p, q + b * p);
    });
    return Real(std::move(c), [](std::size_t k) { return k + 2; });
  }
};

std::string run_cli(const std::string& args, int* exit_code) {
  std::string command = std::string(IREAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  expect(pipe != nullptr, "failed to launch the CLI");
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    output.append(buffer.data(), n);
  }
  *exit_code = WEXITSTATUS(pclose(pipe));
  return output;
}

// --------------------------------------------------------------------------

void criterion_table_reproduction() {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();

  int code = 0;
  std::string csv = run_cli("sqrt 2 --iters 5 --format csv", &code);
  expect(code == 0, "CLI exited nonzero");
  const char* width_col[] = {"4.9e-3", "4.2e-6", "3.2e-12", "1.8e-24", "5.7e-49"};
  const char* modulus_col[] = {"8.3e-2", "4.2e-2", "2.1e-2", "1.0e-2", "5.2e-3"};
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  for (int i = 0; i < 5; ++i) {
    expect(static_cast<bool>(std::getline(lines, line)), "missing row " + std::to_string(i + 1));
    std::vector<std::string> cells;
    std::istringstream cl(line);
    std::string cell;
    while (std::getline(cl, cell, ',')) cells.push_back(cell);
    expect(cells.size() == 7, "row has wrong arity");
    expect(cells[4] == width_col[i], "width decimal row " + std::to_string(i + 1) +
                                         ": got " + cells[4] + " want " + width_col[i]);
    expect(cells[6] == modulus_col[i], "modulus decimal row " + std::to_string(i + 1) +
                                           ": got " + cells[6] + " want " + modulus_col[i]);
    if (i == 0) expect(cells[3] == "1/204", "row 1 exact width");
    if (i == 1) expect(cells[3] == "1/235416", "row 2 exact width");
  }
  std::string text = run_cli("sqrt 2 --iters 5", &code);
  expect(code == 0 && text.find("4.9e-3") != std::string::npos &&
             text.find("5.2e-3") != std::string::npos,
         "text format misses table values");

  auto elapsed = std::chrono::duration<double>(clock::now() - start).count();
  expect(elapsed < 1.0, "took " + std::to_string(elapsed) + "s, limit 1s");
}

void criterion_enclosure_soundness() {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();

  const Rational qs[] = {Rational(2), Rational(3), Rational(5), Rational(1, 2), Rational(10)};
  for (const Rational& q : qs) {
    Real root = newton::sqrt(q);
    Rational prev_width;
    for (std::size_t n = 0; n <= 10; ++n) {
      IntervalQ level = root.at(n);
      expect(level.lo * level.lo <= q, "lower bound fails for q=" + to_string(q));
      expect(q <= level.hi * level.hi, "upper bound fails for q=" + to_string(q));
      Rational width = interval::length(level);
      if (n > 0) {
        expect(width * Rational(2) <= prev_width,
               "width does not halve at n=" + std::to_string(n) + " for q=" + to_string(q));
      }
      prev_width = width;
    }
  }
  auto elapsed = std::chrono::duration<double>(clock::now() - start).count();
  expect(elapsed < 1.0, "took " + std::to_string(elapsed) + "s, limit 1s");
}

void criterion_high_precision_extraction() {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();

  IntervalQ e = reals::refine(newton::sqrt(Rational(2)), 100, 200);
  expect(interval::length(e) <= pow2(-100), "width exceeds 2^-100");
  // independent oracle: floor(sqrt(2 * 4^200)) / 2^200 via integer sqrt
  Integer target = Integer(2) << 400;
  Integer isqrt = boost::multiprecision::sqrt(target);
  expect(isqrt * isqrt <= target && target < (isqrt + 1) * (isqrt + 1),
         "integer square root oracle is broken");
  Rational oracle(isqrt, Integer(1) << 200);
  expect(e.lo <= oracle, "enclosure lower end above the oracle value");
  expect(oracle <= e.hi, "enclosure upper end below the oracle value");

  auto elapsed = std::chrono::duration<double>(clock::now() - start).count();
  expect(elapsed < 5.0, "took " + std::to_string(elapsed) + "s, limit 5s");
}

void criterion_waybelow_oracle() {
  Rng rng(1001);
  for (int i = 0; i < 10000; ++i) {
    IntervalQ a = rng.interval();
    IntervalQ b = rng.range(0, 9) == 0 ? a : rng.interval();
    bool independent = b.lo > a.lo && b.hi < a.hi;  // strict containment, derived afresh
    expect(interval::way_below(a, b) == independent,
           "disagreement at " + interval::to_string(a) + " vs " + interval::to_string(b));
  }
}

void criterion_separated_soundness() {
  Rng rng(1002);
  for (int i = 0; i < 10000; ++i) {
    std::vector<IntervalQ> A, D;
    for (int k = static_cast<int>(rng.range(1, 4)); k > 0; --k) A.push_back(rng.interval());
    for (int k = static_cast<int>(rng.range(0, 4)); k > 0; --k) D.push_back(rng.interval());
    auto witness = interval::separated(A, D);
    if (witness) {
      for (const IntervalQ& a : A) {
        expect(interval::way_below(a, *witness), "witness not way above an A member");
      }
      for (const IntervalQ& d : D) {
        expect(!interval::way_below(d, *witness), "witness way above a D member");
      }
    } else {
      Rational max_lo = A[0].lo, min_hi = A[0].hi;
      for (const IntervalQ& a : A) {
        max_lo = max(max_lo, a.lo);
        min_hi = min(min_hi, a.hi);
      }
      bool sup_fails = max_lo > min_hi;
      bool sup_singleton = !sup_fails && max_lo == min_hi;
      bool containment = false;
      if (!sup_fails) {
        IntervalQ s(max_lo, min_hi);
        for (const IntervalQ& d : D) containment = containment || interval::leq(d, s);
      }
      expect(sup_fails || sup_singleton || containment,
             "negative answer without a disqualifying reason");
    }
  }
}

const std::vector<IntervalQ>& grid() {
  static const std::vector<IntervalQ> g = [] {
    std::vector<IntervalQ> out;
    const Rational widths[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1),
                               Rational(3, 2), Rational(2), Rational(3), Rational(4)};
    for (int a = -4; a <= 3; ++a) {
      for (const Rational& w : widths) out.emplace_back(Rational(a), Rational(a) + w);
    }
    return out;
  }();
  return g;
}

StepFn random_step_fn(Rng& rng) {
  for (;;) {
    std::vector<Step> steps;
    for (int k = static_cast<int>(rng.range(0, 4)); k > 0; --k) {
      steps.push_back({rng.small_interval(), rng.small_interval()});
    }
    try {
      return StepFn::validated(std::move(steps));
    } catch (const ConsistencyError&) {
    }
  }
}

bool grid_leq(const StepFn& s, const StepFn& t) {
  for (const IntervalQ& x : grid()) {
    if (!LiftedIq::leq(s.eval(x), t.eval(x))) return false;
  }
  return true;
}

void criterion_step_function_order() {
  Rng rng(1003);
  for (int i = 0; i < 1000; ++i) {
    StepFn s = random_step_fn(rng);
    StepFn t = random_step_fn(rng);
    if (funcspace::step_leq(s, t)) {
      expect(grid_leq(s, t), "subset decision accepted a pair failing on the grid");
    }
    expect(funcspace::step_leq(s, s), "reflexivity fails");
  }
  // transitivity along approximation chains, antisymmetry up to grid equality
  for (int i = 0; i < 200; ++i) {
    StepFn s = random_step_fn(rng);
    StepFn s0 = funcspace::approx_step(s, 2);
    StepFn s1 = funcspace::approx_step(s, 5);
    expect(funcspace::step_leq(s0, s1) && funcspace::step_leq(s1, s) &&
               funcspace::step_leq(s0, s),
           "transitivity fails along an approximation chain");
    StepFn t = random_step_fn(rng);
    if (funcspace::step_leq(s, t) && funcspace::step_leq(t, s)) {
      for (const IntervalQ& x : grid()) {
        expect(LiftedIq::leq(s.eval(x), t.eval(x)) && LiftedIq::leq(t.eval(x), s.eval(x)),
               "mutually below step functions differ pointwise");
      }
    }
    // distinct representations of one function: a singleton guard never
    // fires, so adding it must leave the order decision fixed both ways
    std::vector<Step> padded;
    for (std::size_t k = 0; k < s.size(); ++k) padded.push_back(s.step(k));
    padded.push_back({IntervalQ(Rational(7), Rational(7)),
                      IntervalQ(Rational(-100), Rational(100))});
    StepFn s_padded = StepFn::validated(std::move(padded));
    expect(funcspace::step_leq(s, s_padded) && funcspace::step_leq(s_padded, s),
           "redundant never-firing step changes the order decision");
  }
}

void criterion_completion_laws() {
  using namespace completion;
  Rng rng(1004);
  constexpr std::size_t kBudget = 12;
  for (int i = 0; i < 200; ++i) {
    IvChain x = rng.chain();

    // own-sup, both constructions
    for (SupMode mode : {SupMode::general, SupMode::continuous_consistency}) {
      Chain<IqBase> d =
          sup_increasing<IqBase>([x](std::size_t n) { return embed<IqBase>(x.at(n)); }, mode);
      expect(leq_probe(x, d, kBudget).confirmed(), "own-sup forward not confirmed");
      expect(leq_probe(d, x, kBudget).confirmed(), "own-sup backward not confirmed");
    }

    // upper bound of an increasing family
    auto family = [x](std::size_t n) {
      return IvChain([x, n](std::size_t m) {
        return interval::extend(x.at(m), pow2(-static_cast<std::int64_t>(n)));
      });
    };
    Chain<IqBase> d = sup_increasing<IqBase>(family, SupMode::continuous_consistency);
    for (std::size_t n = 0; n <= 8; n += 2) {
      expect(leq_probe(family(n), d, kBudget).confirmed(), "upper bound not confirmed");
    }

    // embedding preserves and reflects the order
    IntervalQ a = rng.interval();
    IntervalQ b = rng.range(0, 6) == 0 ? a : rng.interval();
    ProbeResult pr = leq_probe(embed<IqBase>(a), embed<IqBase>(b), kBudget);
    if (interval::leq(a, b)) {
      expect(pr.confirmed(), "embedded order not confirmed");
    } else {
      expect(pr.is_refuted(), "embedded non-order not refuted");
    }
    if (interval::way_below(a, b)) {
      expect(basic_open_member(a, embed<IqBase>(b), 0).confirmed(),
             "way-below not preserved by embedding");
    }

    // sup_finite pointwise formula and upper-bound probes
    std::vector<IvChain> xs;
    for (int k = static_cast<int>(rng.range(1, 3)); k > 0; --k) {
      Rational pad = abs(rng.rational());
      xs.push_back(IvChain([x, pad](std::size_t n) { return interval::extend(x.at(n), pad); }));
    }
    Chain<IqBase> sf = sup_finite(xs);
    for (std::size_t n = 0; n <= 6; n += 2) {
      Rational max_lo = xs[0].at(n).lo, min_hi = xs[0].at(n).hi;
      for (const IvChain& c : xs) {
        max_lo = max(max_lo, c.at(n).lo);
        min_hi = min(min_hi, c.at(n).hi);
      }
      expect(sf.at(n) == IntervalQ(max_lo, min_hi), "sup_finite differs from the formula");
    }
    for (const IvChain& c : xs) {
      expect(leq_probe(c, sf, kBudget).confirmed(), "sup_finite not an upper bound");
    }

    // diagonal suprema agree with iterated suprema (checked inside)
    Rational L = rng.rational();
    Rational H = L + abs(rng.rational());
    predomain::diagonal_sup<IqBase>(
        [L, H](std::size_t n, std::size_t m) {
          return IntervalQ(L - pow2(-static_cast<std::int64_t>(n)),
                           H + pow2(-static_cast<std::int64_t>(m)));
        },
        static_cast<std::size_t>(rng.range(1, 6)));
  }
}

void criterion_markov_cauchy() {
  Rng rng(1005);
  for (int i = 0; i < 50; ++i) {
    auto steps = std::make_shared<std::vector<std::size_t>>();
    std::size_t v = static_cast<std::size_t>(rng.range(0, 10));
    for (int k = 0; k < 260; ++k) {
      steps->push_back(v);
      v += static_cast<std::size_t>(rng.range(0, 3));
    }
    auto M = [steps](std::size_t k) {
      return (*steps)[std::min<std::size_t>(k, steps->size() - 1)];
    };
    auto W = reals::waiting_function(M);
    expect(W(M(0)) == 0, "W(M(0)) != 0");
    std::size_t prev = 0;
    for (std::size_t n = 0; n <= 200; ++n) {
      std::size_t w = W(n);
      expect(w >= prev, "W not nondecreasing");
      prev = w;
      if (n >= M(0)) expect(M(w) <= n, "M(W(n)) > n");
    }
  }
  auto W2 = reals::waiting_function([](std::size_t k) { return 2 * k; });
  for (std::size_t n = 0; n <= 200; ++n) {
    expect(W2(n) == n / 2, "M=2k: W(n) != floor(n/2)");
  }
  for (int i = 0; i < 100; ++i) {
    Real x = rng.total();
    Real back = reals::markov_to_total(reals::total_to_markov(x));
    expect(completion::probe_equal(back.chain(), x.chain(), 12),
           "markov/total round trip not observably the identity");
  }
}

void criterion_extension_demo() {
  auto doubling = [](const Rational& q) { return reals::embed(q + q); };
  auto g = funcspace::extend_nondiscontinuous(
      doubling, {[](const IntervalQ& a) { return Rational(3) * interval::length(a); }});
  Rng rng(1006);
  for (int i = 0; i < 20; ++i) {
    Rational q(Integer(rng.range(-64, 64)), 32);
    IvChain x([q](std::size_t n) {
      Rational p = pow2(-static_cast<std::int64_t>(std::min<std::size_t>(n, 12)));
      return IntervalQ(q - p, q + p);
    });
    IntervalQ e = funcspace::refine_lifted(funcspace::apply(g, x), 6, 3000);
    expect(interval::length(e) <= pow2(-6), "enclosure wider than 2^-6");
    Rational doubled = q + q;
    expect(e.lo <= doubled && doubled <= e.hi,
           "enclosure misses the doubled midpoint limit " + to_string(doubled));
  }
  bool rejected = false;
  auto bad = funcspace::extend_nondiscontinuous(
      doubling, {[](const IntervalQ& a) { return interval::length(a) / Rational(10); }});
  try {
    for (std::size_t n = 0; n < 400; ++n) bad.at(n);
  } catch (const ConsistencyError&) {
    rejected = true;
  }
  expect(rejected, "undersized modulus not rejected");
}

struct Criterion {
  const char* label;
  void (*run)();
};

constexpr Criterion kCriteria[] = {
    {"1. table reproduction: sqrt 2 --iters 5 width/modulus columns, < 1 s",
     criterion_table_reproduction},
    {"2. enclosure soundness: exact bounds and halving for five radicands, < 1 s",
     criterion_enclosure_soundness},
    {"3. high-precision extraction: refine(sqrt(2), 100) vs integer-sqrt oracle, < 5 s",
     criterion_high_precision_extraction},
    {"4. way-below oracle equivalence on 10000 random pairs", criterion_waybelow_oracle},
    {"5. separatedness soundness on 10000 random set pairs", criterion_separated_soundness},
    {"6. step-function order: subset decision vs 64-point grid, 1000 pairs",
     criterion_step_function_order},
    {"7. completion laws on 200 random chains at probe budget 12", criterion_completion_laws},
    {"8. waiting function laws and markov/total round trips", criterion_markov_cauchy},
    {"9. extension demo: 2x with modulus 3*length refines to 2^-6", criterion_extension_demo},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    try {
      criterion.run();
      auto secs = std::chrono::duration<double>(clock::now() - start).count();
      std::printf("[PASS] %s  (%.2fs)\n", criterion.label, secs);
    } catch (const Failure& f) {
      ++failures;
      std::printf("[FAIL] %s\n       %s\n", criterion.label, f.message.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] %s\n       unexpected error: %s\n", criterion.label, e.what());
    }
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", std::size(kCriteria));
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
