#ifndef IREAL_EXPR_HPP
#define IREAL_EXPR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "ireal/rational.hpp"
#include "ireal/reals.hpp"

namespace ireal::expr {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Lit {
  Rational value;
};
struct Add {
  ExprPtr lhs, rhs;
};
struct Neg {
  ExprPtr arg;
};
struct Abs {
  ExprPtr arg;
};
struct Sqrt {
  ExprPtr arg;
};
struct NatScale {
  std::uint64_t factor;
  ExprPtr arg;
};

struct Expr {
  std::variant<Lit, Add, Neg, Abs, Sqrt, NatScale> node;
};

// Grammar:
//   expr    := unary ('+' unary)*
//   unary   := '-' unary | scale
//   scale   := natural '*' unary | primary
//   primary := rational | '(' expr ')' | 'abs' '(' expr ')' | 'sqrt' '(' expr ')'
// Rationals are "a/b", integers, or finite decimals. Throws ParseError with
// the offending position.
ExprPtr parse(const std::string& text);

std::string to_string(const ExprPtr& e);

struct Evaluated {
  reals::Real value;
  // Exact rational value, known whenever no square root was taken.
  std::optional<Rational> exact;
};

// Square-root arguments must be exact rationals certified positive (via a
// strict-margin nonnegativity probe) before iteration starts; a refuted
// probe or an exhausted certificate search raises CertificateError, a
// non-rational argument DomainError.
Evaluated evaluate(const ExprPtr& e, std::size_t budget);

}  // namespace ireal::expr

#endif
