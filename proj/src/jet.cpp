#include "koszul/jet.hpp"

#include <cmath>
#include <stdexcept>

#include "koszul/errors.hpp"

namespace kg {

Jet2 Jet2::partial(int k) const {
  if (order_ < 1) throw std::logic_error("derivative of an order-0 jet");
  Jet2 r = constant(dim_, grad_[k], order_ - 1);
  if (order_ >= 2)
    for (int i = 0; i < dim_; ++i) r.grad_[i] = hess(k, i);
  return r;
}

Jet2& Jet2::operator+=(const Jet2& o) {
  order_ = std::min(order_, o.order_);
  value += o.value;
  for (int i = 0; i < dim_; ++i) grad_[i] += o.grad_[i];
  const int h = dim_ * (dim_ + 1) / 2;
  for (int i = 0; i < h; ++i) hess_[i] += o.hess_[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  order_ = std::min(order_, o.order_);
  value -= o.value;
  for (int i = 0; i < dim_; ++i) grad_[i] -= o.grad_[i];
  const int h = dim_ * (dim_ + 1) / 2;
  for (int i = 0; i < h; ++i) hess_[i] -= o.hess_[i];
  return *this;
}

Jet2& Jet2::operator*=(double s) {
  value *= s;
  for (int i = 0; i < dim_; ++i) grad_[i] *= s;
  const int h = dim_ * (dim_ + 1) / 2;
  for (int i = 0; i < h; ++i) hess_[i] *= s;
  return *this;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.dim_ = a.dim_;
  r.order_ = std::min(a.order_, b.order_);
  r.value = a.value * b.value;
  const int n = a.dim_;
  for (int i = 0; i < n; ++i) r.grad_[i] = a.value * b.grad_[i] + b.value * a.grad_[i];
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) {
      const int k = Jet2::packed(i, j);
      r.hess_[k] = a.value * b.hess_[k] + b.value * a.hess_[k] + a.grad_[i] * b.grad_[j] +
                   a.grad_[j] * b.grad_[i];
    }
  return r;
}

Jet2 Jet2::chain(double f0, double f1, double f2) const {
  Jet2 r;
  r.dim_ = dim_;
  r.order_ = order_;
  r.value = f0;
  for (int i = 0; i < dim_; ++i) r.grad_[i] = f1 * grad_[i];
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i <= j; ++i) {
      const int k = packed(i, j);
      r.hess_[k] = f1 * hess_[k] + f2 * grad_[i] * grad_[j];
    }
  return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.value == 0.0) throw DomainError("division by zero");
  const double v = b.value;
  return a * b.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return a.chain(s, c, -s);
}

Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return a.chain(c, -s, -c);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  return a.chain(e, e, e);
}

Jet2 log(const Jet2& a) {
  if (!(a.value > 0.0)) throw DomainError("log of nonpositive value");
  const double v = a.value;
  return a.chain(std::log(v), 1.0 / v, -1.0 / (v * v));
}

Jet2 sqrt(const Jet2& a) {
  if (a.value < 0.0) throw DomainError("sqrt of negative value");
  const double s = std::sqrt(a.value);
  if (s == 0.0) {
    if (a.order() == 0) return a.chain(0.0, 0.0, 0.0);
    throw DomainError("sqrt is not differentiable at zero");
  }
  return a.chain(s, 0.5 / s, -0.25 / (s * a.value));
}

Jet2 pow(const Jet2& a, double r) {
  const double x = a.value;
  if (r == 0.0) return a.chain(1.0, 0.0, 0.0);
  if (r == std::round(r) && std::abs(r) < 1e9) {
    const long n = static_cast<long>(r);
    if (x == 0.0 && n < 0) throw DomainError("negative power of zero");
    auto p = [x](long k) { return k == 0 ? 1.0 : (k < 0 && x == 0.0 ? 0.0 : std::pow(x, double(k))); };
    const double f0 = p(n);
    const double f1 = double(n) * p(n - 1);
    const double f2 = (n == 1 || n == 0) ? 0.0 : double(n) * double(n - 1) * p(n - 2);
    return a.chain(f0, f1, f2);
  }
  if (!(x > 0.0)) throw DomainError("non-integer power of nonpositive base");
  return a.chain(std::pow(x, r), r * std::pow(x, r - 1.0), r * (r - 1.0) * std::pow(x, r - 2.0));
}

Jet2 pow(const Jet2& a, const Jet2& b) {
  if (!(a.value > 0.0)) throw DomainError("variable power of nonpositive base");
  return exp(b * log(a));
}

}  // namespace kg
