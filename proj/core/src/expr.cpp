#include "ireal/expr.hpp"

#include <cctype>

#include "ireal/newton.hpp"

namespace ireal::expr {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw error("unexpected trailing input");
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  ParseError error(const std::string& msg) const {
    return ParseError(pos_, "parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(const std::string& w) {
    skip_space();
    if (text_.compare(pos_, w.size(), w) == 0) {
      std::size_t after = pos_ + w.size();
      if (after < text_.size() &&
          std::isalnum(static_cast<unsigned char>(text_[after]))) {
        return false;
      }
      pos_ = after;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr lhs = unary();
    while (eat('+')) {
      ExprPtr rhs = unary();
      lhs = std::make_shared<Expr>(Expr{Add{lhs, rhs}});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (eat('-')) {
      return std::make_shared<Expr>(Expr{Neg{unary()}});
    }
    return scale();
  }

  // A bare natural followed by '*' scales; otherwise the number is a literal.
  ExprPtr scale() {
    skip_space();
    std::size_t mark = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::string digits = read_digits();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        Integer n(digits);
        if (n > Integer(UINT64_MAX)) throw error("scale factor too large");
        return std::make_shared<Expr>(Expr{NatScale{n.convert_to<std::uint64_t>(), unary()}});
      }
      pos_ = mark;  // plain number, reparse as a rational literal
    }
    return primary();
  }

  ExprPtr primary() {
    skip_space();
    if (eat_word("abs")) {
      require('(');
      ExprPtr inner = expr();
      require(')');
      return std::make_shared<Expr>(Expr{Abs{inner}});
    }
    if (eat_word("sqrt")) {
      require('(');
      ExprPtr inner = expr();
      require(')');
      return std::make_shared<Expr>(Expr{Sqrt{inner}});
    }
    if (eat('(')) {
      ExprPtr inner = expr();
      require(')');
      return inner;
    }
    return literal();
  }

  void require(char c) {
    if (!eat(c)) throw error(std::string("expected '") + c + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw error("expected digits");
    return text_.substr(start, pos_ - start);
  }

  ExprPtr literal() {
    skip_space();
    std::size_t start = pos_;
    std::string digits = read_digits();
    std::string token = digits;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      token += '/' + read_digits();
    } else if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      token += '.' + read_digits();
    }
    try {
      return std::make_shared<Expr>(Expr{Lit{parse_rational(token)}});
    } catch (const ParseError& e) {
      pos_ = start;
      throw error(e.what());
    }
  }
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string to_string(const ExprPtr& e) {
  struct Printer {
    std::string operator()(const Lit& l) const { return ireal::to_string(l.value); }
    std::string operator()(const Add& a) const {
      return "(" + to_string(a.lhs) + " + " + to_string(a.rhs) + ")";
    }
    std::string operator()(const Neg& n) const { return "-" + to_string(n.arg); }
    std::string operator()(const Abs& a) const { return "abs(" + to_string(a.arg) + ")"; }
    std::string operator()(const Sqrt& s) const { return "sqrt(" + to_string(s.arg) + ")"; }
    std::string operator()(const NatScale& s) const {
      return std::to_string(s.factor) + "*" + to_string(s.arg);
    }
  };
  return std::visit(Printer{}, e->node);
}

namespace {

// Positive certificate: some k with x - 2^-k confirmed nonnegative at
// precision k+2, which pins x >= 2^-k - 2^-(k+2) > 0. A refuted plain
// nonnegativity probe settles the negative case early.
void certify_positive(const reals::Real& x, std::size_t budget) {
  constexpr std::size_t kMaxMargin = 64;
  for (std::size_t k = 1; k <= kMaxMargin; ++k) {
    reals::Real shifted = reals::sub(x, reals::embed(pow2(-static_cast<std::int64_t>(k))));
    if (reals::nonneg_probe(shifted, k + 2, budget).confirmed()) return;
    if (reals::nonneg_probe(x, k, budget).is_refuted()) {
      throw CertificateError("sqrt argument certified negative");
    }
  }
  throw CertificateError("could not certify sqrt argument positive within budget");
}

}  // namespace

Evaluated evaluate(const ExprPtr& e, std::size_t budget) {
  struct Eval {
    std::size_t budget;

    Evaluated operator()(const Lit& l) const {
      return {reals::embed(l.value), l.value};
    }
    Evaluated operator()(const Add& a) const {
      Evaluated lhs = evaluate(a.lhs, budget);
      Evaluated rhs = evaluate(a.rhs, budget);
      std::optional<Rational> exact;
      if (lhs.exact && rhs.exact) exact = *lhs.exact + *rhs.exact;
      return {reals::add(lhs.value, rhs.value), exact};
    }
    Evaluated operator()(const Neg& n) const {
      Evaluated arg = evaluate(n.arg, budget);
      std::optional<Rational> exact;
      if (arg.exact) exact = -*arg.exact;
      return {reals::neg(arg.value), exact};
    }
    Evaluated operator()(const Abs& a) const {
      Evaluated arg = evaluate(a.arg, budget);
      std::optional<Rational> exact;
      if (arg.exact) exact = ireal::abs(*arg.exact);
      return {reals::abs(arg.value), exact};
    }
    Evaluated operator()(const NatScale& s) const {
      Evaluated arg = evaluate(s.arg, budget);
      std::optional<Rational> exact;
      if (arg.exact) exact = *arg.exact * Rational(Integer(s.factor));
      return {reals::scale_nat(s.factor, arg.value), exact};
    }
    Evaluated operator()(const Sqrt& s) const {
      Evaluated arg = evaluate(s.arg, budget);
      if (!arg.exact) {
        throw DomainError("sqrt of a non-rational subexpression is not supported");
      }
      certify_positive(arg.value, budget);
      return {newton::sqrt(*arg.exact), std::nullopt};
    }
  };
  return std::visit(Eval{budget}, e->node);
}

}  // namespace ireal::expr
