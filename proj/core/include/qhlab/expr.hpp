#pragma once

#include <memory>
#include <string>

namespace qhlab {

/// Compiled arithmetic expression over the variables x, y (node coordinates),
/// r (= sqrt(x^2+y^2)) and d (distance to the boundary, when bound).
/// Grammar: + - * / ^ with parentheses, unary minus, numeric literals, and the
/// functions exp, log, sqrt, abs, min, max.
class Expr {
 public:
  /// Parse an expression; throws std::invalid_argument with a position-tagged
  /// message on malformed input.
  static Expr parse(const std::string& text);

  /// Constant expression.
  static Expr constant(double v);

  double eval(double x, double y, double d = 0.0) const;

  /// True when the expression references the d variable (requires a distance
  /// field to evaluate).
  bool uses_distance() const;

  const std::string& source() const { return source_; }

  Expr();
  Expr(const Expr&);
  Expr(Expr&&) noexcept;
  Expr& operator=(const Expr&);
  Expr& operator=(Expr&&) noexcept;
  ~Expr();

  struct Node;  // opaque AST node, defined in expr.cpp

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace qhlab
