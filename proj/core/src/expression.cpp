#include "ocbounds/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ocb {

struct Expression::Node {
  enum class Kind { Constant, X1, X2, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos };

  Kind kind = Kind::Constant;
  double value = 0.0;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(const Point& x) const {
    switch (kind) {
    case Kind::Constant: return value;
    case Kind::X1: return x.x();
    case Kind::X2: return x.y();
    case Kind::Add: return lhs->eval(x) + rhs->eval(x);
    case Kind::Sub: return lhs->eval(x) - rhs->eval(x);
    case Kind::Mul: return lhs->eval(x) * rhs->eval(x);
    case Kind::Div: return lhs->eval(x) / rhs->eval(x);
    case Kind::Pow: return std::pow(lhs->eval(x), rhs->eval(x));
    case Kind::Neg: return -lhs->eval(x);
    case Kind::Sin: return std::sin(lhs->eval(x));
    case Kind::Cos: return std::cos(lhs->eval(x));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->value = value;
  return n;
}

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + std::string(s_) + "': " + what + " at position " +
                                std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Kind::Add, lhs, term());
      else if (accept('-')) lhs = make(Kind::Sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Kind::Mul, lhs, unary());
      else if (accept('/')) lhs = make(Kind::Div, lhs, unary());
      else return lhs;
    }
  }

  // -2^2 is -(2^2); the exponent may carry its own sign
  NodePtr unary() {
    if (accept('-')) return make(Kind::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Kind::Pow, base, unary());
    return base;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::string rest(s_.substr(pos_));
      char* end = nullptr;
      const double v = std::strtod(rest.c_str(), &end);
      if (end == rest.c_str()) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - rest.c_str());
      return make(Kind::Constant, nullptr, nullptr, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string id = identifier();
      if (id == "x1" || id == "x") return make(Kind::X1);
      if (id == "x2" || id == "y") return make(Kind::X2);
      if (id == "pi") return make(Kind::Constant, nullptr, nullptr, std::numbers::pi);
      if (id == "sin" || id == "cos") {
        if (!accept('(')) fail("expected '(' after " + id);
        NodePtr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return make(id == "sin" ? Kind::Sin : Kind::Cos, arg);
      }
      fail("unknown identifier '" + id + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

} // namespace

Expression::Expression(std::string_view source) : source_(source), root_(Parser(source).parse()) {}

double Expression::operator()(const Point& x) const { return root_->eval(x); }

ScalarFunction Expression::function() const {
  return [root = root_](const Point& x) { return root->eval(x); };
}

ScalarFunction parse_function(std::string_view source) { return Expression(source).function(); }

} // namespace ocb
