#include "qhlab/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qhlab {

enum class Op { Const, VarX, VarY, VarR, VarD, Add, Sub, Mul, Div, Pow, Neg, Exp, Log, Sqrt, Abs, Min, Max };

struct Expr::Node {
  Op op;
  double value = 0.0;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_const(double v) {
  auto n = std::make_shared<Expr::Node>();
  n->op = Op::Const;
  n->value = v;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression error at position " + std::to_string(pos_) + ": " +
                                msg + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      if (eat('+')) {
        left = make(Op::Add, left, term());
      } else if (eat('-')) {
        left = make(Op::Sub, left, term());
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = factor();
    for (;;) {
      if (eat('*')) {
        left = make(Op::Mul, left, factor());
      } else if (eat('/')) {
        left = make(Op::Div, left, factor());
      } else {
        return left;
      }
    }
  }

  // Right-associative power binds tighter than unary minus on the left
  // operand's right side: -x^2 parses as -(x^2).
  NodePtr factor() {
    if (eat('-')) return make(Op::Neg, factor());
    NodePtr base = primary();
    if (eat('^')) return make(Op::Pow, base, factor());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return make_const(v);
  }

  NodePtr identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "x") return make(Op::VarX);
    if (name == "y") return make(Op::VarY);
    if (name == "r") return make(Op::VarR);
    if (name == "d") return make(Op::VarD);
    if (name == "pi") return make_const(3.14159265358979323846);
    if (name == "e") return make_const(2.71828182845904523536);

    auto unary = [&](Op op) {
      if (!eat('(')) fail(name + " expects '('");
      NodePtr a = expr();
      if (!eat(')')) fail("expected ')'");
      return make(op, a);
    };
    auto binary = [&](Op op) {
      if (!eat('(')) fail(name + " expects '('");
      NodePtr a = expr();
      if (!eat(',')) fail(name + " expects two arguments");
      NodePtr b = expr();
      if (!eat(')')) fail("expected ')'");
      return make(op, a, b);
    };
    if (name == "exp") return unary(Op::Exp);
    if (name == "log") return unary(Op::Log);
    if (name == "sqrt") return unary(Op::Sqrt);
    if (name == "abs") return unary(Op::Abs);
    if (name == "min") return binary(Op::Min);
    if (name == "max") return binary(Op::Max);
    fail("unknown identifier '" + name + "'");
  }
};

double eval_node(const Expr::Node* n, double x, double y, double d) {
  switch (n->op) {
    case Op::Const: return n->value;
    case Op::VarX: return x;
    case Op::VarY: return y;
    case Op::VarR: return std::hypot(x, y);
    case Op::VarD: return d;
    case Op::Add: return eval_node(n->a.get(), x, y, d) + eval_node(n->b.get(), x, y, d);
    case Op::Sub: return eval_node(n->a.get(), x, y, d) - eval_node(n->b.get(), x, y, d);
    case Op::Mul: return eval_node(n->a.get(), x, y, d) * eval_node(n->b.get(), x, y, d);
    case Op::Div: return eval_node(n->a.get(), x, y, d) / eval_node(n->b.get(), x, y, d);
    case Op::Pow: return std::pow(eval_node(n->a.get(), x, y, d), eval_node(n->b.get(), x, y, d));
    case Op::Neg: return -eval_node(n->a.get(), x, y, d);
    case Op::Exp: return std::exp(eval_node(n->a.get(), x, y, d));
    case Op::Log: return std::log(eval_node(n->a.get(), x, y, d));
    case Op::Sqrt: return std::sqrt(eval_node(n->a.get(), x, y, d));
    case Op::Abs: return std::abs(eval_node(n->a.get(), x, y, d));
    case Op::Min:
      return std::min(eval_node(n->a.get(), x, y, d), eval_node(n->b.get(), x, y, d));
    case Op::Max:
      return std::max(eval_node(n->a.get(), x, y, d), eval_node(n->b.get(), x, y, d));
  }
  return 0.0;
}

bool node_uses_distance(const Expr::Node* n) {
  if (!n) return false;
  if (n->op == Op::VarD) return true;
  return node_uses_distance(n->a.get()) || node_uses_distance(n->b.get());
}

}  // namespace

Expr::Expr() : root_(make_const(0.0)), source_("0") {}
Expr::Expr(const Expr&) = default;
Expr::Expr(Expr&&) noexcept = default;
Expr& Expr::operator=(const Expr&) = default;
Expr& Expr::operator=(Expr&&) noexcept = default;
Expr::~Expr() = default;

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.root_ = Parser(text).run();
  e.source_ = text;
  return e;
}

Expr Expr::constant(double v) {
  Expr e;
  e.root_ = make_const(v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  e.source_ = buf;
  return e;
}

double Expr::eval(double x, double y, double d) const { return eval_node(root_.get(), x, y, d); }

bool Expr::uses_distance() const { return node_uses_distance(root_.get()); }

}  // namespace qhlab
