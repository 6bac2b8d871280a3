#pragma once

#include <optional>
#include <vector>

#include "koszul/connections.hpp"
#include "koszul/manifold.hpp"

namespace kg {

/// Curvature tensors mirror the connection kinds (R, R-bar, R-hat, R-tilde).
using CurvatureKind = ConnectionKind;

double riemann(const MetricField& g, const CoMetricRule& rule, const VectorField& X,
               const VectorField& Y, const VectorField& Z, const VectorField& T, const Point& p);
double ssm_riemann(const MetricField& g, const CoMetricRule& rule, const VectorField& P,
                   const VectorField& X, const VectorField& Y, const VectorField& Z,
                   const VectorField& T, const Point& p);
double ssnm_riemann(const MetricField& g, const CoMetricRule& rule, const VectorField& P,
                    const VectorField& X, const VectorField& Y, const VectorField& Z,
                    const VectorField& T, const Point& p);
double ap_riemann(const MetricField& g, const CoMetricRule& rule, const ProductStructure& J,
                  const VectorField& X, const VectorField& Y, const VectorField& Z,
                  const VectorField& T, const Point& p);
double curvature(const MetricField& g, const CoMetricRule& rule, const ConnectionSpec& spec,
                 const VectorField& X, const VectorField& Y, const VectorField& Z,
                 const VectorField& T, const Point& p);

/// Metric, contraction and connection data frozen at one point, for
/// evaluating many Koszul and curvature values there.
class LocalGeometry {
 public:
  LocalGeometry(const MetricField& g, CoMetricRule rule, ConnectionSpec spec, Point p);

  const Point& point() const { return p_; }
  int dim() const { return g_.n; }
  const JetMetric& metric() const { return g_; }
  const JetConnection& connection() const { return c_; }

  JetVec field(const VectorField& X) const;

  double g(const JetVec& X, const JetVec& Y) const { return pair(g_, X, Y).value; }
  /// Koszul form of the installed connection kind.
  double koszul(const JetVec& X, const JetVec& Y, const JetVec& Z) const;
  double plain_koszul(const JetVec& X, const JetVec& Y, const JetVec& Z) const;
  /// Components of the lower covariant derivative of the installed kind.
  std::vector<double> flat(const JetVec& X, const JetVec& Y) const;
  std::vector<double> plain_flat(const JetVec& X, const JetVec& Y) const;
  double gstar(const std::vector<double>& w, const std::vector<double>& e) const;

  /// Curvature of the installed kind.
  double curvature(const JetVec& X, const JetVec& Y, const JetVec& Z, const JetVec& T) const;
  double plain_riemann(const JetVec& X, const JetVec& Y, const JetVec& Z, const JetVec& T) const;

  const std::vector<double>& cometric() const;

 private:
  double expansion(const JetConnection& c, const JetVec& X, const JetVec& Y, const JetVec& Z,
                   const JetVec& T) const;
  std::vector<double> flat_of(const JetConnection& c, const JetVec& X, const JetVec& Y) const;

  const MetricField* field_g_;
  CoMetricRule rule_;
  ConnectionSpec spec_;
  Point p_;
  JetMetric g_;
  JetConnection c_;
  JetConnection plain_;
  mutable std::optional<std::vector<double>> gplus_;
};

}  // namespace kg
