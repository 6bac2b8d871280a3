#include "koszul/manifold.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "koszul/errors.hpp"

namespace kg {

namespace {

using Mat = Eigen::MatrixXd;

Mat to_eigen(const std::vector<double>& m, int n) {
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m[i * n + j];
  return a;
}

std::vector<double> from_eigen(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  return m;
}

void require_dim(const ChartPtr& chart, std::size_t count, const char* what) {
  if (static_cast<int>(count) != chart->dim())
    throw ChartMismatch(std::string(what) + " has " + std::to_string(count) +
                        " components on chart '" + chart->name() + "' of dimension " +
                        std::to_string(chart->dim()));
}

}  // namespace

ScalarField ScalarField::parse(ChartPtr chart, const std::string& text) {
  Expr e = parse_expr(text, *chart);
  return {std::move(chart), std::move(e)};
}

VectorField VectorField::parse(ChartPtr chart, const std::vector<std::string>& texts) {
  require_dim(chart, texts.size(), "vector field");
  VectorField v{chart, {}};
  for (const auto& t : texts) v.components.push_back(parse_expr(t, *chart));
  return v;
}

VectorField VectorField::coordinate(ChartPtr chart, int index) {
  VectorField v = zero(chart);
  v.components.at(index) = Expr(1.0);
  return v;
}

VectorField VectorField::zero(ChartPtr chart) {
  const int n = chart->dim();
  return {std::move(chart), std::vector<Expr>(n, Expr(0.0))};
}

std::vector<double> VectorField::values(const Point& p) const {
  std::vector<double> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(eval_value(c, p));
  return out;
}

MetricField::MetricField(ChartPtr chart, const std::vector<std::vector<Expr>>& entries)
    : chart_(std::move(chart)) {
  const int n = chart_->dim();
  if (static_cast<int>(entries.size()) != n)
    throw ChartMismatch("metric row count differs from chart dimension");
  entries_.assign(n * (n + 1) / 2, Expr(0.0));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n)
      throw ChartMismatch("metric row length differs from chart dimension");
    for (int j = i; j < n; ++j) {
      if (!(entries[i][j] == entries[j][i]))
        throw SpecMismatch("metric entries (" + std::to_string(i) + "," + std::to_string(j) +
                           ") are not symmetric");
      entries_[index(i, j)] = entries[i][j];
    }
  }
}

MetricField MetricField::parse(ChartPtr chart, const std::vector<std::vector<std::string>>& texts) {
  std::vector<std::vector<Expr>> e;
  for (const auto& row : texts) {
    e.emplace_back();
    for (const auto& t : row) e.back().push_back(parse_expr(t, *chart));
  }
  return MetricField(std::move(chart), e);
}

MetricField MetricField::diagonal(ChartPtr chart, const std::vector<Expr>& diag) {
  const int n = chart->dim();
  require_dim(chart, diag.size(), "metric diagonal");
  std::vector<std::vector<Expr>> e(n, std::vector<Expr>(n, Expr(0.0)));
  for (int i = 0; i < n; ++i) e[i][i] = diag[i];
  return MetricField(std::move(chart), e);
}

std::vector<double> MetricField::matrix(const Point& p) const {
  const int n = dim();
  std::vector<double> m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[i * n + j] = m[j * n + i] = eval_value(entry(i, j), p);
  return m;
}

double metric_eval(const MetricField& g, const VectorField& X, const VectorField& Y, const Point& p) {
  require_same_chart(*g.chart(), *X.chart);
  require_same_chart(*g.chart(), *Y.chart);
  const int n = g.dim();
  const auto x = X.values(p), y = Y.values(p);
  const auto m = g.matrix(p);
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += x[i] * m[i * n + j] * y[j];
  return s;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  require_same_chart(*X.chart, *Y.chart);
  const int n = X.dim();
  VectorField r = VectorField::zero(X.chart);
  for (int k = 0; k < n; ++k) {
    Expr c(0.0);
    for (int i = 0; i < n; ++i) {
      c = c + X.components[i] * diff(Y.components[k], i);
      c = c - Y.components[i] * diff(X.components[k], i);
    }
    r.components[k] = c;
  }
  return r;
}

std::vector<double> exact_inverse(const std::vector<double>& m, int n) {
  const Mat a = to_eigen(m, n);
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  if (n == 0) return {};
  if (!(s(n - 1) > 1e-14 * s(0)) || !std::isfinite(s(0)))
    throw SingularMetric("metric matrix is singular (condition exceeds 1e14)");
  return from_eigen(a.inverse());
}

std::vector<double> pseudo_inverse(const std::vector<double>& m, int n, double rank_tol) {
  if (!(rank_tol > 0.0)) throw SpecError("pseudo-inverse rank tolerance must be positive");
  const Mat a = to_eigen(m, n);
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  const auto& lam = es.eigenvalues();
  double smax = 0.0;
  for (int i = 0; i < n; ++i) smax = std::max(smax, std::abs(lam(i)));
  Mat d = Mat::Zero(n, n);
  if (smax == 0.0) return from_eigen(d);
  for (int i = 0; i < n; ++i) {
    const double rel = std::abs(lam(i)) / smax;
    if (rel >= 0.1 * rank_tol && rel <= 10.0 * rank_tol)
      throw RankDeficiencyAmbiguous("singular value ratio " + std::to_string(rel) +
                                    " is too close to the rank cutoff");
    if (rel > rank_tol) d(i, i) = 1.0 / lam(i);
  }
  const Mat& v = es.eigenvectors();
  return from_eigen(v * d * v.transpose());
}

std::vector<double> cometric_matrix(const MetricField& g, const CoMetricRule& rule, const Point& p) {
  const int n = g.dim();
  if (const auto* pi = std::get_if<PseudoInverse>(&rule))
    return pseudo_inverse(g.matrix(p), n, pi->rank_tol);
  if (std::holds_alternative<ExactInverse>(rule)) return exact_inverse(g.matrix(p), n);
  const auto& pb = std::get<ProductBlock>(rule);
  std::vector<double> out(n * n, 0.0);
  std::vector<bool> covered(n, false);
  for (const auto& b : pb.blocks) {
    const int k = b.end - b.begin;
    const auto full = b.factor_metric.matrix(p);
    std::vector<double> sub(k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i * k + j] = full[(b.begin + i) * n + (b.begin + j)];
    const auto inv = exact_inverse(sub, k);
    double scale = 1.0;
    if (b.warping) {
      const double s = (*b.warping)(p);
      if (s == 0.0) throw SingularMetric("warping vanishes at the contraction point");
      scale = 1.0 / (s * s);
    }
    for (int i = 0; i < k; ++i) {
      covered[b.begin + i] = true;
      for (int j = 0; j < k; ++j) out[(b.begin + i) * n + (b.begin + j)] = scale * inv[i * k + j];
    }
  }
  for (int i = 0; i < n; ++i)
    if (!covered[i]) throw SpecMismatch("product block rule leaves coordinate uncovered");
  return out;
}

double cometric_apply(const MetricField& g, const CoMetricRule& rule, const CovectorField& w,
                      const CovectorField& e, const Point& p) {
  require_same_chart(*g.chart(), *w.chart);
  require_same_chart(*g.chart(), *e.chart);
  const int n = g.dim();
  const auto m = cometric_matrix(g, rule, p);
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += w.components[i] * m[i * n + j] * e.components[j];
  return s;
}

// ------------------------------------------------------------ point data

int JetVec::order() const {
  int o = 2;
  for (const auto& j : c) o = std::min(o, j.order());
  return o;
}

JetVec jet_of(const VectorField& X, const Point& p) {
  JetVec v;
  v.c.reserve(X.components.size());
  for (const auto& e : X.components) v.c.push_back(eval_jet2(e, p));
  return v;
}

JetMetric jet_of(const MetricField& g, const Point& p) {
  JetMetric m;
  m.n = g.dim();
  m.g.resize(m.n * m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = i; j < m.n; ++j) m.g[i * m.n + j] = m.g[j * m.n + i] = eval_jet2(g.entry(i, j), p);
  return m;
}

JetVec coordinate_jet(int n, int index) {
  JetVec v = zero_jet(n);
  v.c[index] = Jet2::constant(n, 1.0);
  return v;
}

JetVec zero_jet(int n) { return JetVec{std::vector<Jet2>(n, Jet2::constant(n, 0.0))}; }

Jet2 pair(const JetMetric& g, const JetVec& X, const JetVec& Y) {
  const int n = g.n;
  Jet2 s = Jet2::constant(n, 0.0);
  for (int j = 0; j < n; ++j) {
    if (Y.c[j].is_exact_zero()) {
      s.truncate(Y.c[j].order());
      continue;
    }
    Jet2 gy = Jet2::constant(n, 0.0);
    for (int i = 0; i < n; ++i) {
      if (X.c[i].is_exact_zero()) {
        gy.truncate(X.c[i].order());
        continue;
      }
      const Jet2& gij = g(i, j);
      if (gij.is_exact_zero()) {
        gy.truncate(gij.order());
        continue;
      }
      gy += X.c[i] * gij;
    }
    s += gy * Y.c[j];
  }
  return s;
}

Jet2 deriv(const JetVec& X, const Jet2& f) {
  const int n = X.dim();
  Jet2 s = Jet2::constant(n, 0.0, f.order() - 1);
  for (int i = 0; i < n; ++i) {
    if (X.c[i].is_exact_zero()) {
      s.truncate(X.c[i].order());
      continue;
    }
    s += X.c[i] * f.partial(i);
  }
  return s;
}

JetVec bracket(const JetVec& X, const JetVec& Y) {
  const int n = X.dim();
  JetVec r;
  r.c.reserve(n);
  for (int k = 0; k < n; ++k) r.c.push_back(deriv(X, Y.c[k]) - deriv(Y, X.c[k]));
  return r;
}

JetVec scale(const Jet2& f, const JetVec& X) {
  JetVec r;
  r.c.reserve(X.c.size());
  for (const auto& c : X.c) r.c.push_back(f * c);
  return r;
}

JetVec add(const JetVec& X, const JetVec& Y) {
  JetVec r;
  r.c.reserve(X.c.size());
  for (std::size_t i = 0; i < X.c.size(); ++i) r.c.push_back(X.c[i] + Y.c[i]);
  return r;
}

}  // namespace kg
