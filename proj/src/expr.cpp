#include "koszul/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "koszul/errors.hpp"

namespace kg {

namespace {

std::shared_ptr<const ExprNode> make_node(Op op, double num, int var,
                                          std::shared_ptr<const ExprNode> a = nullptr,
                                          std::shared_ptr<const ExprNode> b = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->num = num;
  n->var = var;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

bool nodes_equal(const ExprNode* x, const ExprNode* y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->op != y->op) return false;
  switch (x->op) {
    case Op::Num: return x->num == y->num;
    case Op::Var: return x->var == y->var;
    default: return nodes_equal(x->a.get(), y->a.get()) && nodes_equal(x->b.get(), y->b.get());
  }
}

void collect(const ExprNode* n, std::set<int>& out) {
  if (!n) return;
  if (n->op == Op::Var) out.insert(n->var);
  collect(n->a.get(), out);
  collect(n->b.get(), out);
}

}  // namespace

Expr::Expr(double v) : node_(make_node(Op::Num, v, -1)) {}

Expr Expr::var(int index) { return Expr(make_node(Op::Var, 0.0, index)); }

Expr Expr::unary(Op op, Expr a) { return Expr(make_node(op, 0.0, -1, a.node_)); }

Expr Expr::binary(Op op, Expr a, Expr b) { return Expr(make_node(op, 0.0, -1, a.node_, b.node_)); }

Op Expr::op() const { return node_->op; }
double Expr::number() const { return node_->num; }
int Expr::var_index() const { return node_->var; }
Expr Expr::lhs() const { return Expr(node_->a); }
Expr Expr::rhs() const { return Expr(node_->b); }

bool Expr::operator==(const Expr& other) const { return nodes_equal(node_.get(), other.node_.get()); }

int Expr::arity() const {
  std::set<int> v;
  collect_vars(v);
  return v.empty() ? 0 : *v.rbegin() + 1;
}

void Expr::collect_vars(std::set<int>& out) const { collect(node_.get(), out); }

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Expr::binary(Op::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return Expr::binary(Op::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr(0.0);
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return Expr::binary(Op::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_one()) return a;
  if (a.is_zero() && !b.is_zero()) return Expr(0.0);
  return Expr::binary(Op::Div, a, b);
}

Expr operator-(const Expr& a) {
  if (a.is_zero()) return a;
  return Expr::unary(Op::Neg, a);
}

Expr pow(const Expr& a, const Expr& b) {
  if (b.is_one()) return a;
  if (b.is_zero()) return Expr(1.0);
  return Expr::binary(Op::Pow, a, b);
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Chart& chart) : s_(text), chart_(chart) {}

  Expr run() {
    skip();
    if (pos_ == s_.size()) throw EmptyExpression("expression is empty");
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (eat('+')) e = Expr::binary(Op::Add, e, product());
      else if (eat('-')) e = Expr::binary(Op::Sub, e, product());
      else return e;
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (eat('*')) e = Expr::binary(Op::Mul, e, unary());
      else if (eat('/')) e = Expr::binary(Op::Div, e, unary());
      else return e;
    }
  }

  Expr unary() {
    if (eat('-')) return Expr::unary(Op::Neg, unary());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (eat('^')) return Expr::binary(Op::Pow, base, unary());
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t n = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) throw SyntaxError(start, "malformed number");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      const std::size_t save = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;
    }
    return Expr(std::strtod(s_.substr(start, pos_ - start).c_str(), nullptr));
  }

  Expr name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string id = s_.substr(start, pos_ - start);
    const int idx = chart_.index_of(id);
    if (idx >= 0) return Expr::var(idx);
    static const std::pair<const char*, Op> funcs[] = {
        {"sin", Op::Sin}, {"cos", Op::Cos}, {"exp", Op::Exp}, {"log", Op::Log}, {"sqrt", Op::Sqrt}};
    for (const auto& [fname, op] : funcs) {
      if (id == fname) {
        if (!eat('(')) throw SyntaxError(pos_, "expected '(' after " + id);
        Expr arg = sum();
        if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
        return Expr::unary(op, arg);
      }
    }
    if (id == "pi") return Expr(std::numbers::pi);
    throw UnknownSymbol(id);
  }

  const std::string& s_;
  const Chart& chart_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    default: return 5;
  }
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (v < 0) s = "(" + s + ")";
  return s;
}

void print_into(const Expr& e, const Chart& chart, std::string& out);

void print_child(const Expr& e, const Chart& chart, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(e, chart, out);
  if (parens) out += ')';
}

void print_into(const Expr& e, const Chart& chart, std::string& out) {
  const Op op = e.op();
  switch (op) {
    case Op::Num: out += format_number(e.number()); return;
    case Op::Var: out += chart.coords().at(e.var_index()); return;
    case Op::Neg:
      out += '-';
      print_child(e.lhs(), chart, precedence(e.lhs().op()) < 3, out);
      return;
    case Op::Sin: out += "sin("; break;
    case Op::Cos: out += "cos("; break;
    case Op::Exp: out += "exp("; break;
    case Op::Log: out += "log("; break;
    case Op::Sqrt: out += "sqrt("; break;
    case Op::Pow:
      print_child(e.lhs(), chart, precedence(e.lhs().op()) <= 4, out);
      out += '^';
      print_child(e.rhs(), chart, precedence(e.rhs().op()) < 3, out);
      return;
    default: {
      const int p = precedence(op);
      print_child(e.lhs(), chart, precedence(e.lhs().op()) < p, out);
      out += op == Op::Add ? " + " : op == Op::Sub ? " - " : op == Op::Mul ? " * " : " / ";
      print_child(e.rhs(), chart, precedence(e.rhs().op()) <= p, out);
      return;
    }
  }
  print_into(e.lhs(), chart, out);
  out += ')';
}

bool constant_value(const Expr& e, double& v) {
  std::set<int> vars;
  e.collect_vars(vars);
  if (!vars.empty()) return false;
  v = eval_value(e, {});
  return true;
}

Jet2 eval_node(const Expr& e, const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  switch (e.op()) {
    case Op::Num: return Jet2::constant(n, e.number());
    case Op::Var: {
      const int i = e.var_index();
      if (i < 0 || i >= n) throw ChartMismatch("expression uses a coordinate outside the point");
      return Jet2::variable(n, i, p[i]);
    }
    case Op::Add: return eval_node(e.lhs(), p) + eval_node(e.rhs(), p);
    case Op::Sub: return eval_node(e.lhs(), p) - eval_node(e.rhs(), p);
    case Op::Mul: return eval_node(e.lhs(), p) * eval_node(e.rhs(), p);
    case Op::Div: return eval_node(e.lhs(), p) / eval_node(e.rhs(), p);
    case Op::Neg: return -eval_node(e.lhs(), p);
    case Op::Sin: return sin(eval_node(e.lhs(), p));
    case Op::Cos: return cos(eval_node(e.lhs(), p));
    case Op::Exp: return exp(eval_node(e.lhs(), p));
    case Op::Log: return log(eval_node(e.lhs(), p));
    case Op::Sqrt: return sqrt(eval_node(e.lhs(), p));
    case Op::Pow: {
      double r;
      if (constant_value(e.rhs(), r)) return pow(eval_node(e.lhs(), p), r);
      return pow(eval_node(e.lhs(), p), eval_node(e.rhs(), p));
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace

Expr parse_expr(const std::string& text, const Chart& chart) { return Parser(text, chart).run(); }

std::string print_expr(const Expr& e, const Chart& chart) {
  std::string out;
  print_into(e, chart, out);
  return out;
}

Jet2 eval_jet2(const Expr& e, const std::vector<double>& p) { return eval_node(e, p); }

double eval_value(const Expr& e, const std::vector<double>& p) {
  switch (e.op()) {
    case Op::Num: return e.number();
    case Op::Var: return p.at(e.var_index());
    case Op::Add: return eval_value(e.lhs(), p) + eval_value(e.rhs(), p);
    case Op::Sub: return eval_value(e.lhs(), p) - eval_value(e.rhs(), p);
    case Op::Mul: return eval_value(e.lhs(), p) * eval_value(e.rhs(), p);
    case Op::Div: {
      const double d = eval_value(e.rhs(), p);
      if (d == 0.0) throw DomainError("division by zero");
      return eval_value(e.lhs(), p) / d;
    }
    case Op::Neg: return -eval_value(e.lhs(), p);
    case Op::Sin: return std::sin(eval_value(e.lhs(), p));
    case Op::Cos: return std::cos(eval_value(e.lhs(), p));
    case Op::Exp: return std::exp(eval_value(e.lhs(), p));
    case Op::Log: {
      const double a = eval_value(e.lhs(), p);
      if (!(a > 0.0)) throw DomainError("log of nonpositive value");
      return std::log(a);
    }
    case Op::Sqrt: {
      const double a = eval_value(e.lhs(), p);
      if (a < 0.0) throw DomainError("sqrt of negative value");
      return std::sqrt(a);
    }
    case Op::Pow: {
      const double a = eval_value(e.lhs(), p), r = eval_value(e.rhs(), p);
      if (r != std::round(r) && !(a > 0.0))
        throw DomainError("non-integer power of nonpositive base");
      if (a == 0.0 && r < 0.0) throw DomainError("negative power of zero");
      return std::pow(a, r);
    }
  }
  throw std::logic_error("unhandled expression node");
}

Expr diff(const Expr& e, int k) {
  switch (e.op()) {
    case Op::Num: return Expr(0.0);
    case Op::Var: return Expr(e.var_index() == k ? 1.0 : 0.0);
    case Op::Add: return diff(e.lhs(), k) + diff(e.rhs(), k);
    case Op::Sub: return diff(e.lhs(), k) - diff(e.rhs(), k);
    case Op::Mul: return diff(e.lhs(), k) * e.rhs() + e.lhs() * diff(e.rhs(), k);
    case Op::Div: {
      const Expr& a = e.lhs();
      const Expr& b = e.rhs();
      return diff(a, k) / b - a * diff(b, k) / (b * b);
    }
    case Op::Neg: return -diff(e.lhs(), k);
    case Op::Sin: return Expr::unary(Op::Cos, e.lhs()) * diff(e.lhs(), k);
    case Op::Cos: return -(Expr::unary(Op::Sin, e.lhs()) * diff(e.lhs(), k));
    case Op::Exp: return e * diff(e.lhs(), k);
    case Op::Log: return diff(e.lhs(), k) / e.lhs();
    case Op::Sqrt: return diff(e.lhs(), k) / (Expr(2.0) * e);
    case Op::Pow: {
      const Expr a = e.lhs(), b = e.rhs();
      std::set<int> vars;
      b.collect_vars(vars);
      if (vars.empty()) {
        const Expr bm1 = b.is_number() ? Expr(b.number() - 1.0) : b - Expr(1.0);
        return b * pow(a, bm1) * diff(a, k);
      }
      return e * (diff(b, k) * Expr::unary(Op::Log, a) + b * diff(a, k) / a);
    }
  }
  throw std::logic_error("unhandled expression node");
}

Expr remap(const Expr& e, const std::vector<int>& map) {
  switch (e.op()) {
    case Op::Num: return e;
    case Op::Var: {
      const int i = e.var_index();
      if (i < 0 || i >= static_cast<int>(map.size()) || map[i] < 0)
        throw SpecMismatch("expression depends on coordinate #" + std::to_string(i) +
                           " which is not available in the target chart");
      return Expr::var(map[i]);
    }
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow: return Expr::binary(e.op(), remap(e.lhs(), map), remap(e.rhs(), map));
    default: return Expr::unary(e.op(), remap(e.lhs(), map));
  }
}

}  // namespace kg
