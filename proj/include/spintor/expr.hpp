#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spintor/errors.hpp"

namespace spintor {

// Immutable expression tree over chart coordinates: numeric literals,
// variables, + - * /, integer ^, unary -, and exp/log/sqrt/sin/cos.
// Smart constructors fold constants so derivative trees stay small.
class Expr {
 public:
  enum class Kind { Num, Var, Add, Sub, Mul, Div, Pow, Neg, Func };

  struct Node;
  using Ptr = std::shared_ptr<const Node>;

  struct Node {
    Kind kind;
    double value = 0;          // Num
    std::string name;          // Var / Func
    int exponent = 0;          // Pow
    Ptr a, b;                  // children
  };

  Expr() : node_(num_node(0)) {}
  explicit Expr(double v) : node_(num_node(v)) {}

  static Expr number(double v) { return Expr(num_node(v)); }
  static Expr var(const std::string& name);

  static Expr add(const Expr& a, const Expr& b);
  static Expr sub(const Expr& a, const Expr& b);
  static Expr mul(const Expr& a, const Expr& b);
  static Expr div(const Expr& a, const Expr& b);
  static Expr pow(const Expr& a, int k);
  static Expr neg(const Expr& a);
  static Expr call(const std::string& fn, const Expr& a);

  friend Expr operator+(const Expr& a, const Expr& b) { return add(a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return sub(a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return mul(a, b); }
  friend Expr operator/(const Expr& a, const Expr& b) { return div(a, b); }
  Expr operator-() const { return neg(*this); }

  const Node& node() const { return *node_; }
  bool is_number() const { return node_->kind == Kind::Num; }
  bool is_zero_literal() const {
    return node_->kind == Kind::Num && node_->value == 0.0;
  }

  std::string str() const;

  explicit Expr(Ptr n) : node_(std::move(n)) {}

 private:
  static Ptr num_node(double v);
  Ptr node_;
};

using Env = std::map<std::string, double>;

// Recursive-descent parser for the expression grammar. Throws ParseError
// with byte offset and expected-token set.
Expr parse_expr(const std::string& text);

// Exact structural derivative with respect to a variable name.
Expr differentiate(const Expr& e, const std::string& var);

// IEEE double evaluation; throws DomainError (carrying the offending
// subexpression) on log of a non-positive value, sqrt of a negative value,
// or division by anything smaller than 1e-300 in magnitude.
double evaluate(const Expr& e, const Env& env);

// Evaluation that also reports the largest |value| over all subterms, used
// as the magnitude scale for relative-tolerance residual checks.
struct EvalScale {
  double value;
  double scale;
};
EvalScale evaluate_with_scale(const Expr& e, const Env& env);

// Names of all variables referenced by the expression.
std::vector<std::string> collect_variables(const Expr& e);

}  // namespace spintor
