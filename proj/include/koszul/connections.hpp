#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/manifold.hpp"

namespace kg {

enum class ConnectionKind { Plain, SemiSymMetric, SemiSymNonMetric, AlmostProduct };

const char* to_string(ConnectionKind k);

/// J on the coordinate fields: (JX)^i = sum_j matrix[i][j] X^j.
struct ProductStructure {
  ChartPtr chart;
  std::vector<std::vector<Expr>> matrix;

  static ProductStructure identity(ChartPtr chart);
  static ProductStructure constant(ChartPtr chart, const std::vector<std::vector<double>>& m);
  VectorField apply(const VectorField& X) const;
};

struct ConnectionSpec {
  ConnectionKind kind = ConnectionKind::Plain;
  std::optional<VectorField> P;
  std::optional<ProductStructure> J;

  static ConnectionSpec plain() { return {}; }
  static ConnectionSpec ssm(VectorField P) { return {ConnectionKind::SemiSymMetric, std::move(P), {}}; }
  static ConnectionSpec ssnm(VectorField P) {
    return {ConnectionKind::SemiSymNonMetric, std::move(P), {}};
  }
  static ConnectionSpec ap(ProductStructure J) {
    return {ConnectionKind::AlmostProduct, {}, std::move(J)};
  }

  /// Throws SpecMismatch unless the auxiliary data fits the kind.
  void validate() const;
};

double koszul(const MetricField& g, const VectorField& X, const VectorField& Y, const VectorField& Z,
              const Point& p);
double ssm_koszul(const MetricField& g, const VectorField& P, const VectorField& X,
                  const VectorField& Y, const VectorField& Z, const Point& p);
double ssnm_koszul(const MetricField& g, const VectorField& P, const VectorField& X,
                   const VectorField& Y, const VectorField& Z, const Point& p);
double ap_koszul(const MetricField& g, const ProductStructure& J, const VectorField& X,
                 const VectorField& Y, const VectorField& Z, const Point& p);
double koszul_form(const MetricField& g, const ConnectionSpec& spec, const VectorField& X,
                   const VectorField& Y, const VectorField& Z, const Point& p);

CovectorField lower_cov_deriv(const MetricField& g, const ConnectionSpec& spec, const VectorField& X,
                              const VectorField& Y, const Point& p);

struct StructureReport {
  double involution_residual = 0.0;  // max |J^2 - I|
  double isometry_residual = 0.0;    // max |g(JX,JY) - g(X,Y)|
  bool pass = false;
};

StructureReport validate_structure(const MetricField& g, const ProductStructure& J,
                                   const std::vector<Point>& sample_points,
                                   unsigned long long seed = 0);

// ------------------------------------------------------------ point data

struct JetMatrix {
  int n = 0;
  std::vector<Jet2> m;
  const Jet2& operator()(int i, int j) const { return m[i * n + j]; }
};

JetMatrix jet_of(const ProductStructure& J, const Point& p);
JetVec apply(const JetMatrix& J, const JetVec& X);

/// Connection data evaluated at a point.
struct JetConnection {
  ConnectionKind kind = ConnectionKind::Plain;
  JetVec P;
  JetMatrix J;
};

JetConnection jet_of(const ConnectionSpec& spec, const Point& p);

Jet2 koszul_jet(const JetMetric& g, const JetVec& X, const JetVec& Y, const JetVec& Z);
Jet2 koszul_jet(const JetMetric& g, const JetConnection& c, const JetVec& X, const JetVec& Y,
                const JetVec& Z);

/// Max |J^2 - I| entrywise at a point.
double involution_residual(const JetMatrix& J);

}  // namespace kg
