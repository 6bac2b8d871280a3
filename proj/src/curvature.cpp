#include "koszul/curvature.hpp"

#include "koszul/errors.hpp"

namespace kg {

LocalGeometry::LocalGeometry(const MetricField& g, CoMetricRule rule, ConnectionSpec spec, Point p)
    : field_g_(&g), rule_(std::move(rule)), spec_(std::move(spec)), p_(std::move(p)) {
  g.chart()->check_point(p_);
  if (spec_.P) require_same_chart(*g.chart(), *spec_.P->chart);
  if (spec_.J) require_same_chart(*g.chart(), *spec_.J->chart);
  g_ = jet_of(g, p_);
  c_ = jet_of(spec_, p_);
  if (c_.kind == ConnectionKind::AlmostProduct && involution_residual(c_.J) > 1e-10)
    throw InvalidStructure("J^2 differs from the identity at the evaluation point");
}

JetVec LocalGeometry::field(const VectorField& X) const {
  require_same_chart(*field_g_->chart(), *X.chart);
  return jet_of(X, p_);
}

double LocalGeometry::koszul(const JetVec& X, const JetVec& Y, const JetVec& Z) const {
  return koszul_jet(g_, c_, X, Y, Z).value;
}

double LocalGeometry::plain_koszul(const JetVec& X, const JetVec& Y, const JetVec& Z) const {
  return koszul_jet(g_, X, Y, Z).value;
}

std::vector<double> LocalGeometry::flat_of(const JetConnection& c, const JetVec& X,
                                           const JetVec& Y) const {
  std::vector<double> w(dim());
  for (int i = 0; i < dim(); ++i) w[i] = koszul_jet(g_, c, X, Y, coordinate_jet(dim(), i)).value;
  return w;
}

std::vector<double> LocalGeometry::flat(const JetVec& X, const JetVec& Y) const {
  return flat_of(c_, X, Y);
}

std::vector<double> LocalGeometry::plain_flat(const JetVec& X, const JetVec& Y) const {
  return flat_of(plain_, X, Y);
}

const std::vector<double>& LocalGeometry::cometric() const {
  if (!gplus_) gplus_ = cometric_matrix(*field_g_, rule_, p_);
  return *gplus_;
}

double LocalGeometry::gstar(const std::vector<double>& w, const std::vector<double>& e) const {
  const auto& m = cometric();
  const int n = dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    if (w[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) s += w[i] * m[i * n + j] * e[j];
  }
  return s;
}

double LocalGeometry::expansion(const JetConnection& c, const JetVec& X, const JetVec& Y,
                                const JetVec& Z, const JetVec& T) const {
  double r = deriv(X, koszul_jet(g_, c, Y, Z, T)).value;
  r -= deriv(Y, koszul_jet(g_, c, X, Z, T)).value;
  r -= koszul_jet(g_, c, bracket(X, Y), Z, T).value;
  r += gstar(flat_of(c, X, Z), flat_of(c, Y, T));
  r -= gstar(flat_of(c, Y, Z), flat_of(c, X, T));
  return r;
}

double LocalGeometry::plain_riemann(const JetVec& X, const JetVec& Y, const JetVec& Z,
                                    const JetVec& T) const {
  return expansion(plain_, X, Y, Z, T);
}

double LocalGeometry::curvature(const JetVec& X, const JetVec& Y, const JetVec& Z,
                                const JetVec& T) const {
  switch (c_.kind) {
    case ConnectionKind::Plain: return plain_riemann(X, Y, Z, T);
    case ConnectionKind::AlmostProduct: return expansion(c_, X, Y, Z, T);
    case ConnectionKind::SemiSymMetric: {
      const JetVec& P = c_.P;
      const double gYP = g(Y, P), gXZ = g(X, Z), gPT = g(P, T), gXP = g(X, P), gYZ = g(Y, Z);
      const double gYT = g(Y, T), gXT = g(X, T);
      return plain_riemann(X, Y, Z, T) - gYP * gXZ * gPT + gXP * gYZ * gPT +
             koszul(X, P, Z) * gYT - koszul(Y, P, Z) * gXT - plain_koszul(X, P, T) * gYZ +
             plain_koszul(Y, P, T) * gXZ;
    }
    case ConnectionKind::SemiSymNonMetric: {
      const JetVec& P = c_.P;
      const Jet2 gZP = pair(g_, Z, P);
      const double gPT = g(P, T);
      return plain_riemann(X, Y, Z, T) + deriv(X, gZP).value * g(Y, T) -
             deriv(Y, gZP).value * g(X, T) - koszul(Y, Z, X) * gPT + koszul(X, Z, Y) * gPT;
    }
  }
  throw std::logic_error("unhandled connection kind");
}

double curvature(const MetricField& g, const CoMetricRule& rule, const ConnectionSpec& spec,
                 const VectorField& X, const VectorField& Y, const VectorField& Z,
                 const VectorField& T, const Point& p) {
  const LocalGeometry lg(g, rule, spec, p);
  return lg.curvature(lg.field(X), lg.field(Y), lg.field(Z), lg.field(T));
}

double riemann(const MetricField& g, const CoMetricRule& rule, const VectorField& X,
               const VectorField& Y, const VectorField& Z, const VectorField& T, const Point& p) {
  return curvature(g, rule, ConnectionSpec::plain(), X, Y, Z, T, p);
}

double ssm_riemann(const MetricField& g, const CoMetricRule& rule, const VectorField& P,
                   const VectorField& X, const VectorField& Y, const VectorField& Z,
                   const VectorField& T, const Point& p) {
  return curvature(g, rule, ConnectionSpec::ssm(P), X, Y, Z, T, p);
}

double ssnm_riemann(const MetricField& g, const CoMetricRule& rule, const VectorField& P,
                    const VectorField& X, const VectorField& Y, const VectorField& Z,
                    const VectorField& T, const Point& p) {
  return curvature(g, rule, ConnectionSpec::ssnm(P), X, Y, Z, T, p);
}

double ap_riemann(const MetricField& g, const CoMetricRule& rule, const ProductStructure& J,
                  const VectorField& X, const VectorField& Y, const VectorField& Z,
                  const VectorField& T, const Point& p) {
  return curvature(g, rule, ConnectionSpec::ap(J), X, Y, Z, T, p);
}

}  // namespace kg
