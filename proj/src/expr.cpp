#include "spintor/expr.hpp"

#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace spintor {

namespace {

const std::set<std::string> kFunctions = {"exp", "log", "sqrt", "sin", "cos"};

Expr::Ptr make_node(Expr::Node n) {
  return std::make_shared<const Expr::Node>(std::move(n));
}

}  // namespace

Expr::Ptr Expr::num_node(double v) {
  Node n;
  n.kind = Kind::Num;
  n.value = v;
  return make_node(std::move(n));
}

Expr Expr::var(const std::string& name) {
  Node n;
  n.kind = Kind::Var;
  n.name = name;
  return Expr(make_node(std::move(n)));
}

Expr Expr::add(const Expr& a, const Expr& b) {
  if (a.is_number() && b.is_number())
    return number(a.node().value + b.node().value);
  if (a.is_zero_literal()) return b;
  if (b.is_zero_literal()) return a;
  Node n;
  n.kind = Kind::Add;
  n.a = a.node_;
  n.b = b.node_;
  return Expr(make_node(std::move(n)));
}

Expr Expr::sub(const Expr& a, const Expr& b) {
  if (a.is_number() && b.is_number())
    return number(a.node().value - b.node().value);
  if (b.is_zero_literal()) return a;
  if (a.is_zero_literal()) return neg(b);
  Node n;
  n.kind = Kind::Sub;
  n.a = a.node_;
  n.b = b.node_;
  return Expr(make_node(std::move(n)));
}

Expr Expr::mul(const Expr& a, const Expr& b) {
  if (a.is_number() && b.is_number())
    return number(a.node().value * b.node().value);
  if (a.is_zero_literal() || b.is_zero_literal()) return number(0);
  if (a.is_number() && a.node().value == 1.0) return b;
  if (b.is_number() && b.node().value == 1.0) return a;
  if (a.is_number() && a.node().value == -1.0) return neg(b);
  if (b.is_number() && b.node().value == -1.0) return neg(a);
  Node n;
  n.kind = Kind::Mul;
  n.a = a.node_;
  n.b = b.node_;
  return Expr(make_node(std::move(n)));
}

Expr Expr::div(const Expr& a, const Expr& b) {
  if (a.is_zero_literal() && !(b.is_number() && b.node().value == 0.0))
    return number(0);
  if (b.is_number() && b.node().value == 1.0) return a;
  Node n;
  n.kind = Kind::Div;
  n.a = a.node_;
  n.b = b.node_;
  return Expr(make_node(std::move(n)));
}

Expr Expr::pow(const Expr& a, int k) {
  if (k == 0) return number(1);
  if (k == 1) return a;
  if (a.is_number()) return number(std::pow(a.node().value, k));
  Node n;
  n.kind = Kind::Pow;
  n.exponent = k;
  n.a = a.node_;
  return Expr(make_node(std::move(n)));
}

Expr Expr::neg(const Expr& a) {
  if (a.is_number()) return number(-a.node().value);
  if (a.node().kind == Kind::Neg) return Expr(a.node().a);
  Node n;
  n.kind = Kind::Neg;
  n.a = a.node_;
  return Expr(make_node(std::move(n)));
}

Expr Expr::call(const std::string& fn, const Expr& a) {
  if (!kFunctions.count(fn))
    throw StructuralError("unknown function '" + fn + "'");
  Node n;
  n.kind = Kind::Func;
  n.name = fn;
  n.a = a.node_;
  return Expr(make_node(std::move(n)));
}

// --- printing ----------------------------------------------------------

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void print_node(const Expr::Node& n, std::ostream& os, int parent_prec) {
  int prec = precedence(n.kind);
  bool wrap = prec < parent_prec;
  if (wrap) os << "(";
  switch (n.kind) {
    case Expr::Kind::Num: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      std::string s = tmp.str();
      if (n.value < 0) {
        os << "(" << s << ")";
      } else {
        os << s;
      }
      break;
    }
    case Expr::Kind::Var: os << n.name; break;
    case Expr::Kind::Add:
      print_node(*n.a, os, prec);
      os << " + ";
      print_node(*n.b, os, prec + 1);
      break;
    case Expr::Kind::Sub:
      print_node(*n.a, os, prec);
      os << " - ";
      print_node(*n.b, os, prec + 1);
      break;
    case Expr::Kind::Mul:
      print_node(*n.a, os, prec);
      os << "*";
      print_node(*n.b, os, prec + 1);
      break;
    case Expr::Kind::Div:
      print_node(*n.a, os, prec);
      os << "/";
      print_node(*n.b, os, prec + 1);
      break;
    case Expr::Kind::Neg:
      os << "-";
      print_node(*n.a, os, prec + 1);
      break;
    case Expr::Kind::Pow:
      print_node(*n.a, os, prec + 1);
      os << "^" << n.exponent;
      break;
    case Expr::Kind::Func:
      os << n.name << "(";
      print_node(*n.a, os, 0);
      os << ")";
      break;
  }
  if (wrap) os << ")";
}

}  // namespace

std::string Expr::str() const {
  std::ostringstream os;
  print_node(*node_, os, 0);
  return os.str();
}

// --- parser ------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(unsigned(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    throw ParseError("parse error at offset " + std::to_string(pos) +
                         ": expected " + expected,
                     pos, expected);
  }

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos != text.size()) fail("operator or end of input");
    return e;
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+'))
        e = Expr::add(e, term());
      else if (accept('-'))
        e = Expr::sub(e, term());
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*'))
        e = Expr::mul(e, unary());
      else if (accept('/'))
        e = Expr::div(e, unary());
      else
        return e;
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::neg(unary());
    return power();
  }

  Expr power() {
    Expr e = atom();
    while (accept('^')) e = Expr::pow(e, integer());
    return e;
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(unsigned(text[pos]))) {
      pos = start;
      fail("integer exponent");
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(unsigned(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return int(negative ? -v : v);
  }

  Expr atom() {
    skip_ws();
    if (pos >= text.size()) fail("number, '(' or identifier");
    char c = text[pos];
    if (std::isdigit(unsigned(c)) || c == '.') return number();
    if (c == '(') {
      ++pos;
      Expr e = expr();
      if (!accept(')')) fail("')'");
      return e;
    }
    if (std::isalpha(unsigned(c)) || c == '_') {
      std::string name = identifier();
      if (kFunctions.count(name)) {
        if (!accept('(')) fail("'(' after function name");
        Expr e = expr();
        if (!accept(')')) fail("')'");
        return Expr::call(name, e);
      }
      return Expr::var(name);
    }
    fail("number, '(' or identifier");
  }

  Expr number() {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(unsigned(text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      size_t mark = pos;
      ++pos;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
      if (pos < text.size() && std::isdigit(unsigned(text[pos]))) {
        while (pos < text.size() && std::isdigit(unsigned(text[pos]))) ++pos;
      } else {
        pos = mark;  // 'e' belongs to a following identifier, not an exponent
      }
    }
    try {
      return Expr::number(std::stod(text.substr(start, pos - start)));
    } catch (const std::exception&) {
      pos = start;
      fail("numeric literal");
    }
  }

  std::string identifier() {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(unsigned(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

// --- differentiation ----------------------------------------------------

Expr differentiate(const Expr& e, const std::string& var) {
  const Expr::Node& n = e.node();
  switch (n.kind) {
    case Expr::Kind::Num: return Expr::number(0);
    case Expr::Kind::Var: return Expr::number(n.name == var ? 1 : 0);
    case Expr::Kind::Add:
      return Expr::add(differentiate(Expr(n.a), var),
                       differentiate(Expr(n.b), var));
    case Expr::Kind::Sub:
      return Expr::sub(differentiate(Expr(n.a), var),
                       differentiate(Expr(n.b), var));
    case Expr::Kind::Mul: {
      Expr a(n.a), b(n.b);
      return Expr::add(Expr::mul(differentiate(a, var), b),
                       Expr::mul(a, differentiate(b, var)));
    }
    case Expr::Kind::Div: {
      Expr a(n.a), b(n.b);
      Expr num = Expr::sub(Expr::mul(differentiate(a, var), b),
                           Expr::mul(a, differentiate(b, var)));
      return Expr::div(num, Expr::pow(b, 2));
    }
    case Expr::Kind::Pow: {
      Expr a(n.a);
      return Expr::mul(
          Expr::mul(Expr::number(n.exponent), Expr::pow(a, n.exponent - 1)),
          differentiate(a, var));
    }
    case Expr::Kind::Neg: return Expr::neg(differentiate(Expr(n.a), var));
    case Expr::Kind::Func: {
      Expr a(n.a);
      Expr da = differentiate(a, var);
      if (n.name == "exp") return Expr::mul(Expr::call("exp", a), da);
      if (n.name == "log") return Expr::div(da, a);
      if (n.name == "sqrt")
        return Expr::div(da, Expr::mul(Expr::number(2), Expr::call("sqrt", a)));
      if (n.name == "sin") return Expr::mul(Expr::call("cos", a), da);
      if (n.name == "cos")
        return Expr::neg(Expr::mul(Expr::call("sin", a), da));
      throw StructuralError("unknown function '" + n.name + "'");
    }
  }
  throw StructuralError("malformed expression node");
}

// --- evaluation ----------------------------------------------------------

namespace {

double eval_node(const Expr::Node& n, const Env& env, double* scale) {
  double r = 0;
  switch (n.kind) {
    case Expr::Kind::Num: r = n.value; break;
    case Expr::Kind::Var: {
      auto it = env.find(n.name);
      if (it == env.end())
        throw DomainError("unbound variable '" + n.name + "'");
      r = it->second;
      break;
    }
    case Expr::Kind::Add:
      r = eval_node(*n.a, env, scale) + eval_node(*n.b, env, scale);
      break;
    case Expr::Kind::Sub:
      r = eval_node(*n.a, env, scale) - eval_node(*n.b, env, scale);
      break;
    case Expr::Kind::Mul:
      r = eval_node(*n.a, env, scale) * eval_node(*n.b, env, scale);
      break;
    case Expr::Kind::Div: {
      double num = eval_node(*n.a, env, scale);
      double den = eval_node(*n.b, env, scale);
      if (std::fabs(den) < 1e-300)
        throw DomainError("division by zero in " + Expr(n.b).str());
      r = num / den;
      break;
    }
    case Expr::Kind::Pow:
      r = std::pow(eval_node(*n.a, env, scale), n.exponent);
      break;
    case Expr::Kind::Neg: r = -eval_node(*n.a, env, scale); break;
    case Expr::Kind::Func: {
      double a = eval_node(*n.a, env, scale);
      if (n.name == "exp") {
        r = std::exp(a);
      } else if (n.name == "log") {
        if (a <= 0)
          throw DomainError("log of non-positive value in log(" +
                            Expr(n.a).str() + ")");
        r = std::log(a);
      } else if (n.name == "sqrt") {
        if (a < 0)
          throw DomainError("sqrt of negative value in sqrt(" +
                            Expr(n.a).str() + ")");
        r = std::sqrt(a);
      } else if (n.name == "sin") {
        r = std::sin(a);
      } else if (n.name == "cos") {
        r = std::cos(a);
      }
      break;
    }
  }
  if (scale) *scale = std::max(*scale, std::fabs(r));
  return r;
}

}  // namespace

double evaluate(const Expr& e, const Env& env) {
  return eval_node(e.node(), env, nullptr);
}

EvalScale evaluate_with_scale(const Expr& e, const Env& env) {
  double scale = 0;
  double v = eval_node(e.node(), env, &scale);
  return {v, scale};
}

namespace {

void collect_vars_node(const Expr::Node& n, std::set<std::string>& out) {
  if (n.kind == Expr::Kind::Var) out.insert(n.name);
  if (n.a) collect_vars_node(*n.a, out);
  if (n.b) collect_vars_node(*n.b, out);
}

}  // namespace

std::vector<std::string> collect_variables(const Expr& e) {
  std::set<std::string> names;
  collect_vars_node(e.node(), names);
  return {names.begin(), names.end()};
}

}  // namespace spintor
