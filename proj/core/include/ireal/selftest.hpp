#ifndef IREAL_SELFTEST_HPP
#define IREAL_SELFTEST_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ireal/interval.hpp"

namespace ireal::selftest {

// Swappable decision procedures. Tests substitute a corrupted one to verify
// the harness actually catches violations.
struct Hooks {
  std::function<bool(const IntervalQ&, const IntervalQ&)> iq_way_below =
      [](const IntervalQ& a, const IntervalQ& b) { return interval::way_below(a, b); };
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;  // first violation, when failed
  std::string note;            // informational, never a failure
};

struct Report {
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const SuiteResult& s : suites)
      if (!s.passed) return false;
    return true;
  }
};

// Runs every law suite with `cases` random cases each, deterministically in
// `seed`. With cases = 0 no suite runs and the report is empty.
Report run_all(std::size_t cases, std::uint64_t seed, const Hooks& hooks = {});

}  // namespace ireal::selftest

#endif
