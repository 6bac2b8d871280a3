#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "koszul/chart.hpp"
#include "koszul/jet.hpp"

namespace kg {

enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Exp, Log, Sqrt };

struct ExprNode;

/// Immutable expression tree over chart coordinates (stored by index).
class Expr {
 public:
  Expr() : Expr(0.0) {}
  Expr(double v);  // NOLINT(google-explicit-constructor)

  static Expr var(int index);
  static Expr unary(Op op, Expr a);
  static Expr binary(Op op, Expr a, Expr b);

  Op op() const;
  double number() const;
  int var_index() const;
  Expr lhs() const;
  Expr rhs() const;

  bool is_number() const { return op() == Op::Num; }
  bool is_zero() const { return is_number() && number() == 0.0; }
  bool is_one() const { return is_number() && number() == 1.0; }

  /// Structural equality.
  bool operator==(const Expr& other) const;

  /// Largest variable index used plus one.
  int arity() const;
  void collect_vars(std::set<int>& out) const;

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
  Op op = Op::Num;
  double num = 0.0;
  int var = -1;
  std::shared_ptr<const ExprNode> a;
  std::shared_ptr<const ExprNode> b;
};

// Builders with light folding of 0 and 1; no further simplification.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& a, const Expr& b);

Expr parse_expr(const std::string& text, const Chart& chart);
std::string print_expr(const Expr& e, const Chart& chart);

/// Value, gradient and Hessian at p (p.size() == chart dim).
Jet2 eval_jet2(const Expr& e, const std::vector<double>& p);
double eval_value(const Expr& e, const std::vector<double>& p);

/// Symbolic partial derivative along coordinate k.
Expr diff(const Expr& e, int k);

/// Rewrites variable i as variable map[i]; map[i] < 0 raises SpecMismatch.
Expr remap(const Expr& e, const std::vector<int>& map);

}  // namespace kg
