#include "koszul/generators.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>

#include "koszul/errors.hpp"

namespace kg {

namespace {

std::vector<int> all_vars(const Chart& c) {
  std::vector<int> v(c.dim());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> pick_signs(Rng& rng, int n, std::vector<int> signs) {
  if (signs.empty())
    for (int i = 0; i < n; ++i) signs.push_back(rng.coin() ? 1 : -1);
  return signs;
}

}  // namespace

VectorField random_vector_field(Rng& rng, const ChartPtr& chart, std::vector<int> vars) {
  if (vars.empty()) vars = all_vars(*chart);
  VectorField v = VectorField::zero(chart);
  for (auto& c : v.components) c = random_polynomial(rng, vars);
  return v;
}

MetricField random_metric(Rng& rng, const ChartPtr& chart, std::vector<int> signs) {
  const int n = chart->dim();
  signs = pick_signs(rng, n, std::move(signs));
  const auto vars = all_vars(*chart);
  std::vector<std::vector<Expr>> e(n, std::vector<Expr>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == j)
        e[i][i] = Expr(3.0 * signs[i]) + random_polynomial(rng, vars, 2, -0.5, 0.5);
      else
        e[i][j] = e[j][i] = random_polynomial(rng, vars, 2, -0.5, 0.5);
    }
  return MetricField(chart, e);
}

MetricField random_diagonal_metric(Rng& rng, const ChartPtr& chart, std::vector<int> signs) {
  const int n = chart->dim();
  signs = pick_signs(rng, n, std::move(signs));
  std::vector<Expr> d;
  for (int i = 0; i < n; ++i)
    d.push_back(Expr(3.0 * signs[i]) + random_polynomial(rng, all_vars(*chart), 2, -0.5, 0.5));
  return MetricField::diagonal(chart, d);
}

double conditioning(const MetricField& g, const Point& p) {
  const int n = g.dim();
  const auto m = g.matrix(p);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m[i * n + j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  return s(0) == 0.0 ? 0.0 : s(n - 1) / s(0);
}

Point random_regular_point(Rng& rng, const MetricField& g, double min_conditioning, double shrink) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Point p = random_point(rng, *g.chart(), shrink);
    if (conditioning(g, p) >= min_conditioning) return p;
  }
  throw SingularMetric("no regular point found for a random metric");
}

StructuredMetric random_structured_metric(Rng& rng, const ChartPtr& chart) {
  const int n = chart->dim();
  const auto vars = all_vars(*chart);
  const int choice = rng.index(n >= 2 ? 4 : 2);
  if (choice == 0 || choice == 1) {
    // J = +-I with an arbitrary metric
    StructuredMetric s{random_metric(rng, chart), ProductStructure::identity(chart)};
    if (choice == 1)
      for (auto& row : s.J.matrix)
        for (auto& e : row)
          if (!e.is_zero()) e = Expr(-1.0);
    return s;
  }
  if (choice == 2) {
    // J diagonal with random signs, diagonal metric
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) m[i][i] = rng.coin() ? 1.0 : -1.0;
    return {random_diagonal_metric(rng, chart), ProductStructure::constant(chart, m)};
  }
  // swap the first two coordinates; g11 = g22, g1k = g2k for the rest
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  m[0][1] = m[1][0] = 1.0;
  for (int i = 2; i < n; ++i) m[i][i] = 1.0;
  const int s = rng.coin() ? 1 : -1;
  std::vector<std::vector<Expr>> e(n, std::vector<Expr>(n));
  const Expr a = Expr(3.0 * s) + random_polynomial(rng, vars, 2, -0.5, 0.5);
  e[0][0] = e[1][1] = a;
  e[0][1] = e[1][0] = random_polynomial(rng, vars, 2, -0.5, 0.5);
  for (int k = 2; k < n; ++k) {
    e[0][k] = e[k][0] = e[1][k] = e[k][1] = random_polynomial(rng, vars, 2, -0.3, 0.3);
    e[k][k] = Expr(3.0 * (rng.coin() ? 1 : -1)) + random_polynomial(rng, vars, 2, -0.5, 0.5);
    for (int l = k + 1; l < n; ++l) e[k][l] = e[l][k] = random_polynomial(rng, vars, 2, -0.3, 0.3);
  }
  return {MetricField(chart, e), ProductStructure::constant(chart, m)};
}

}  // namespace kg
