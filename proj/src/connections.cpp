#include "koszul/connections.hpp"

#include <cmath>

#include "koszul/errors.hpp"
#include "koszul/random.hpp"

namespace kg {

const char* to_string(ConnectionKind k) {
  switch (k) {
    case ConnectionKind::Plain: return "plain";
    case ConnectionKind::SemiSymMetric: return "ssm";
    case ConnectionKind::SemiSymNonMetric: return "ssnm";
    case ConnectionKind::AlmostProduct: return "ap";
  }
  return "?";
}

ProductStructure ProductStructure::identity(ChartPtr chart) {
  const int n = chart->dim();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) m[i][i] = 1.0;
  return constant(std::move(chart), m);
}

ProductStructure ProductStructure::constant(ChartPtr chart, const std::vector<std::vector<double>>& m) {
  ProductStructure J{std::move(chart), {}};
  for (const auto& row : m) {
    J.matrix.emplace_back();
    for (double v : row) J.matrix.back().push_back(Expr(v));
  }
  return J;
}

VectorField ProductStructure::apply(const VectorField& X) const {
  require_same_chart(*chart, *X.chart);
  const int n = X.dim();
  VectorField r = VectorField::zero(X.chart);
  for (int i = 0; i < n; ++i) {
    Expr c(0.0);
    for (int j = 0; j < n; ++j) c = c + matrix[i][j] * X.components[j];
    r.components[i] = c;
  }
  return r;
}

void ConnectionSpec::validate() const {
  const bool needs_p = kind == ConnectionKind::SemiSymMetric || kind == ConnectionKind::SemiSymNonMetric;
  const bool needs_j = kind == ConnectionKind::AlmostProduct;
  if (needs_p != P.has_value())
    throw SpecMismatch(std::string("connection '") + to_string(kind) +
                       (needs_p ? "' requires P" : "' takes no P"));
  if (needs_j != J.has_value())
    throw SpecMismatch(std::string("connection '") + to_string(kind) +
                       (needs_j ? "' requires J" : "' takes no J"));
}

// ------------------------------------------------------------ point data

JetMatrix jet_of(const ProductStructure& J, const Point& p) {
  JetMatrix r;
  r.n = static_cast<int>(J.matrix.size());
  if (r.n != static_cast<int>(p.size())) throw ChartMismatch("product structure size differs from point");
  r.m.reserve(r.n * r.n);
  for (const auto& row : J.matrix) {
    if (static_cast<int>(row.size()) != r.n) throw ChartMismatch("product structure is not square");
    for (const auto& e : row) r.m.push_back(eval_jet2(e, p));
  }
  return r;
}

JetVec apply(const JetMatrix& J, const JetVec& X) {
  const int n = J.n;
  JetVec r;
  r.c.reserve(n);
  for (int i = 0; i < n; ++i) {
    Jet2 s = Jet2::constant(n, 0.0);
    for (int j = 0; j < n; ++j) {
      if (J(i, j).is_exact_zero() || X.c[j].is_exact_zero()) {
        s.truncate(std::min(J(i, j).order(), X.c[j].order()));
        continue;
      }
      s += J(i, j) * X.c[j];
    }
    r.c.push_back(s);
  }
  return r;
}

JetConnection jet_of(const ConnectionSpec& spec, const Point& p) {
  spec.validate();
  JetConnection c;
  c.kind = spec.kind;
  if (spec.P) c.P = jet_of(*spec.P, p);
  if (spec.J) c.J = jet_of(*spec.J, p);
  return c;
}

double involution_residual(const JetMatrix& J) {
  double r = 0.0;
  for (int i = 0; i < J.n; ++i)
    for (int k = 0; k < J.n; ++k) {
      double s = 0.0;
      for (int j = 0; j < J.n; ++j) s += J(i, j).value * J(j, k).value;
      r = std::max(r, std::abs(s - (i == k ? 1.0 : 0.0)));
    }
  return r;
}

Jet2 koszul_jet(const JetMetric& g, const JetVec& X, const JetVec& Y, const JetVec& Z) {
  Jet2 s = deriv(X, pair(g, Y, Z));
  s += deriv(Y, pair(g, Z, X));
  s -= deriv(Z, pair(g, X, Y));
  s -= pair(g, X, bracket(Y, Z));
  s += pair(g, Y, bracket(Z, X));
  s += pair(g, Z, bracket(X, Y));
  return 0.5 * s;
}

Jet2 koszul_jet(const JetMetric& g, const JetConnection& c, const JetVec& X, const JetVec& Y,
                const JetVec& Z) {
  switch (c.kind) {
    case ConnectionKind::Plain: return koszul_jet(g, X, Y, Z);
    case ConnectionKind::SemiSymMetric:
      return koszul_jet(g, X, Y, Z) + pair(g, Y, c.P) * pair(g, X, Z) -
             pair(g, X, Y) * pair(g, c.P, Z);
    case ConnectionKind::SemiSymNonMetric:
      return koszul_jet(g, X, Y, Z) + pair(g, Y, c.P) * pair(g, X, Z);
    case ConnectionKind::AlmostProduct:
      return 0.5 * (koszul_jet(g, X, Y, Z) + koszul_jet(g, X, apply(c.J, Y), apply(c.J, Z)));
  }
  throw std::logic_error("unhandled connection kind");
}

// ------------------------------------------------------------ public ops

namespace {

void check_fields(const MetricField& g, std::initializer_list<const VectorField*> fs, const Point& p) {
  for (const auto* f : fs) require_same_chart(*g.chart(), *f->chart);
  g.chart()->check_point(p);
}

}  // namespace

double koszul(const MetricField& g, const VectorField& X, const VectorField& Y, const VectorField& Z,
              const Point& p) {
  return koszul_form(g, ConnectionSpec::plain(), X, Y, Z, p);
}

double ssm_koszul(const MetricField& g, const VectorField& P, const VectorField& X,
                  const VectorField& Y, const VectorField& Z, const Point& p) {
  return koszul_form(g, ConnectionSpec::ssm(P), X, Y, Z, p);
}

double ssnm_koszul(const MetricField& g, const VectorField& P, const VectorField& X,
                   const VectorField& Y, const VectorField& Z, const Point& p) {
  return koszul_form(g, ConnectionSpec::ssnm(P), X, Y, Z, p);
}

double ap_koszul(const MetricField& g, const ProductStructure& J, const VectorField& X,
                 const VectorField& Y, const VectorField& Z, const Point& p) {
  return koszul_form(g, ConnectionSpec::ap(J), X, Y, Z, p);
}

double koszul_form(const MetricField& g, const ConnectionSpec& spec, const VectorField& X,
                   const VectorField& Y, const VectorField& Z, const Point& p) {
  check_fields(g, {&X, &Y, &Z}, p);
  if (spec.P) require_same_chart(*g.chart(), *spec.P->chart);
  if (spec.J) require_same_chart(*g.chart(), *spec.J->chart);
  const JetConnection c = jet_of(spec, p);
  if (c.kind == ConnectionKind::AlmostProduct && involution_residual(c.J) > 1e-10)
    throw InvalidStructure("J^2 differs from the identity at the evaluation point");
  return koszul_jet(jet_of(g, p), c, jet_of(X, p), jet_of(Y, p), jet_of(Z, p)).value;
}

CovectorField lower_cov_deriv(const MetricField& g, const ConnectionSpec& spec, const VectorField& X,
                              const VectorField& Y, const Point& p) {
  check_fields(g, {&X, &Y}, p);
  const JetConnection c = jet_of(spec, p);
  if (c.kind == ConnectionKind::AlmostProduct && involution_residual(c.J) > 1e-10)
    throw InvalidStructure("J^2 differs from the identity at the evaluation point");
  const JetMetric gm = jet_of(g, p);
  const JetVec x = jet_of(X, p), y = jet_of(Y, p);
  CovectorField w{g.chart(), {}};
  for (int i = 0; i < g.dim(); ++i)
    w.components.push_back(koszul_jet(gm, c, x, y, coordinate_jet(g.dim(), i)).value);
  return w;
}

StructureReport validate_structure(const MetricField& g, const ProductStructure& J,
                                   const std::vector<Point>& sample_points, unsigned long long seed) {
  StructureReport r;
  Rng rng(seed);
  const int n = g.dim();
  for (const auto& p : sample_points) {
    const JetMatrix jm = jet_of(J, p);
    r.involution_residual = std::max(r.involution_residual, involution_residual(jm));
    const auto gm = g.matrix(p);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<double> x(n), y(n), jx(n, 0.0), jy(n, 0.0);
      for (int i = 0; i < n; ++i) x[i] = rng.uniform(-1, 1), y[i] = rng.uniform(-1, 1);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jx[i] += jm(i, j).value * x[j], jy[i] += jm(i, j).value * y[j];
      double a = 0.0, b = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a += jx[i] * gm[i * n + j] * jy[j], b += x[i] * gm[i * n + j] * y[j];
      r.isometry_residual = std::max(r.isometry_residual, std::abs(a - b));
    }
  }
  r.pass = r.involution_residual < 1e-9 && r.isometry_residual < 1e-9;
  return r;
}

}  // namespace kg
