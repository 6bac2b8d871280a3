#pragma once

#include <algorithm>
#include <array>
#include <cstddef>

namespace kg {

inline constexpr int kMaxDim = 12;

/// Truncated second-order Taylor data of a scalar at a point.
///
/// `order` records how many derivative levels are valid (0, 1 or 2).
/// Arithmetic keeps the smaller order of its operands, and taking a
/// directional derivative lowers it by one.
class Jet2 {
 public:
  Jet2() = default;

  static Jet2 constant(int dim, double v, int order = 2) {
    Jet2 j;
    j.dim_ = dim;
    j.order_ = order;
    j.value = v;
    j.clear_derivs();
    return j;
  }
  static Jet2 variable(int dim, int index, double v) {
    Jet2 j = constant(dim, v);
    j.grad_[index] = 1.0;
    return j;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }

  double value = 0.0;
  double grad(int i) const { return grad_[i]; }
  double& grad(int i) { return grad_[i]; }
  double hess(int i, int j) const { return hess_[packed(i, j)]; }
  double& hess(int i, int j) { return hess_[packed(i, j)]; }

  /// Partial derivative along coordinate k, one order lower.
  Jet2 partial(int k) const;

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(double s);

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, double s) { return a *= s; }
  friend Jet2 operator*(double s, Jet2 a) { return a *= s; }
  friend Jet2 operator-(Jet2 a) { return a *= -1.0; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b);
  friend Jet2 operator/(const Jet2& a, const Jet2& b);

  /// Applies a scalar function given f(v), f'(v), f''(v).
  Jet2 chain(double f0, double f1, double f2) const;

  void truncate(int order) { order_ = std::min(order_, order); }

  /// True for the constant zero (all stored derivatives zero as well).
  bool is_exact_zero() const {
    if (value != 0.0) return false;
    for (int i = 0; i < dim_; ++i)
      if (grad_[i] != 0.0) return false;
    const int h = dim_ * (dim_ + 1) / 2;
    for (int i = 0; i < h; ++i)
      if (hess_[i] != 0.0) return false;
    return true;
  }

 private:
  static int packed(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j + 1) / 2 + i;
  }
  void clear_derivs() {
    std::fill_n(grad_.begin(), dim_, 0.0);
    std::fill_n(hess_.begin(), dim_ * (dim_ + 1) / 2, 0.0);
  }

  int dim_ = 0;
  int order_ = 2;
  std::array<double, kMaxDim> grad_;
  std::array<double, kMaxDim*(kMaxDim + 1) / 2> hess_;
};

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 pow(const Jet2& a, double r);
Jet2 pow(const Jet2& a, const Jet2& b);

}  // namespace kg
