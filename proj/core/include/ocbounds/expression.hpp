#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ocbounds/problem.hpp"

namespace ocb {

/// Small arithmetic grammar for user supplied data functions:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' unary)?
///   primary := number | x1 | x2 | x | y | pi
///            | sin '(' expr ')' | cos '(' expr ')' | '(' expr ')'
///
/// Parsing errors throw std::invalid_argument with the offending position.
class Expression {
public:
  struct Node;

  explicit Expression(std::string_view source);

  double operator()(const Point& x) const;
  const std::string& source() const noexcept { return source_; }

  /// Wraps the expression in a ScalarFunction (shares the parsed tree).
  ScalarFunction function() const;

private:
  std::string source_;
  std::shared_ptr<const Node> root_;
};

ScalarFunction parse_function(std::string_view source);

} // namespace ocb
