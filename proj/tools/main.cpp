// Command-line front end: evaluates expressions to guaranteed enclosures,
// prints the square-root width/modulus comparison table, and runs the
// randomized law-check suites.
//
// Exit codes: 0 ok, 1 parse/argument error, 2 budget exhausted,
// 3 certificate failure, 4 selftest violation.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ireal/errors.hpp"
#include "ireal/expr.hpp"
#include "ireal/newton.hpp"
#include "ireal/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitSelftest = 4;

unsigned decimal_digits_for_bits(std::size_t bits) {
  // enough decimal digits to resolve 2^-bits, plus slack
  return static_cast<unsigned>(std::max<std::size_t>(4, bits * 302 / 1000 + 2));
}

int run_eval(const std::string& text, std::size_t bits, std::size_t budget) {
  using namespace ireal;
  expr::ExprPtr tree;
  try {
    tree = expr::parse(text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (budget == 0) budget = 4 * bits + 64;
  try {
    expr::Evaluated value = expr::evaluate(tree, budget);
    IntervalQ enclosure = reals::refine(value.value, bits, budget);
    unsigned digits = decimal_digits_for_bits(bits);
    Rational width = interval::length(enclosure);
    std::cout << interval::to_string(enclosure) << "\n";
    std::cout << "~ [" << to_decimal_string(enclosure.lo, digits) << ", "
              << to_decimal_string(enclosure.hi, digits) << "]\n";
    std::cout << "width " << to_string(width) << " ~ " << to_scientific_string(width, 2)
              << "\n";
    return kExitOk;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CertificateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_sqrt(const std::string& q_text, std::size_t iters, const std::string& format) {
  using namespace ireal;
  Rational q;
  try {
    q = parse_rational(q_text);
    if (q.sign() <= 0) {
      std::cerr << "error: sqrt requires a positive rational, got " << q_text << "\n";
      return kExitUsage;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<newton::SqrtTableRow> rows = newton::sqrt_table(q, iters);
  if (format == "text") {
    std::cout << "iteration  interval width  modulus precision\n";
    for (const auto& row : rows) {
      std::string width = to_scientific_string(row.width, 2);
      std::cout << row.iteration << std::string(11 - std::to_string(row.iteration).size(), ' ')
                << width << std::string(width.size() < 16 ? 16 - width.size() : 1, ' ')
                << to_scientific_string(row.modulus_bound, 2) << "\n";
    }
  } else if (format == "csv") {
    std::cout << "iteration,lower,upper,width,width_decimal,modulus,modulus_decimal\n";
    for (const auto& row : rows) {
      std::cout << row.iteration << ',' << to_string(row.lower) << ',' << to_string(row.upper)
                << ',' << to_string(row.width) << ',' << to_scientific_string(row.width, 2)
                << ',' << to_string(row.modulus_bound) << ','
                << to_scientific_string(row.modulus_bound, 2) << "\n";
    }
  } else {  // json
    nlohmann::json out;
    out["q"] = to_string(q);
    out["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
      out["rows"].push_back({
          {"iteration", row.iteration},
          {"lower", to_string(row.lower)},
          {"upper", to_string(row.upper)},
          {"width", to_string(row.width)},
          {"width_decimal", to_scientific_string(row.width, 2)},
          {"modulus", to_string(row.modulus_bound)},
          {"modulus_decimal", to_scientific_string(row.modulus_bound, 2)},
      });
    }
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_selftest(std::size_t cases, std::uint64_t seed) {
  using namespace ireal;
  selftest::Report report = selftest::run_all(cases, seed);
  std::size_t failures = 0;
  for (const auto& suite : report.suites) {
    if (suite.passed) {
      std::cout << "ok   " << suite.name << " (" << suite.cases << " cases)\n";
    } else {
      ++failures;
      std::cout << "FAIL " << suite.name << ": " << suite.counterexample << "\n";
    }
    if (!suite.note.empty()) {
      std::cout << "note " << suite.name << ": " << suite.note << "\n";
    }
  }
  std::cout << report.suites.size() << " suites run, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact real arithmetic over rational interval enclosures"};
  app.require_subcommand(1);

  std::string expr_text;
  std::size_t bits = 30;
  std::size_t budget = 0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression to a guaranteed enclosure");
  eval->add_option("expression", expr_text, "expression, e.g. \"sqrt(2) + -1\"")->required();
  eval->add_option("--bits", bits, "target width 2^-bits (default 30)");
  eval->add_option("--budget", budget, "search depth cap (default 4*bits + 64)");

  std::string q_text;
  std::size_t iters = 5;
  std::string format = "text";
  CLI::App* sqrt_cmd = app.add_subcommand("sqrt", "width vs modulus table for sqrt(q)");
  sqrt_cmd->add_option("q", q_text, "positive rational, e.g. 2 or 1/2")->required();
  sqrt_cmd->add_option("--iters", iters, "number of iterations (default 5)");
  sqrt_cmd->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  std::size_t cases = 200;
  std::uint64_t seed = 1;
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the randomized law checks");
  selftest_cmd->add_option("--cases", cases, "random cases per suite (default 200)");
  selftest_cmd->add_option("--seed", seed, "RNG seed (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(expr_text, bits, budget);
    if (app.got_subcommand(sqrt_cmd)) return run_sqrt(q_text, iters, format);
    return run_selftest(cases, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
