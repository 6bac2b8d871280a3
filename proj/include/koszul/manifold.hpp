#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "koszul/chart.hpp"
#include "koszul/expr.hpp"
#include "koszul/jet.hpp"

namespace kg {

using Point = std::vector<double>;

struct ScalarField {
  ChartPtr chart;
  Expr expr;

  static ScalarField parse(ChartPtr chart, const std::string& text);
  Jet2 jet(const Point& p) const { return eval_jet2(expr, p); }
  double operator()(const Point& p) const { return eval_value(expr, p); }
};

/// Components on the coordinate fields of a chart.
struct VectorField {
  ChartPtr chart;
  std::vector<Expr> components;

  static VectorField parse(ChartPtr chart, const std::vector<std::string>& texts);
  static VectorField coordinate(ChartPtr chart, int index);
  static VectorField zero(ChartPtr chart);

  int dim() const { return static_cast<int>(components.size()); }
  std::vector<double> values(const Point& p) const;
};

/// Values of a 1-form on the coordinate fields at a point.
struct CovectorField {
  ChartPtr chart;
  std::vector<double> components;
};

/// Symmetric matrix of scalar fields; entries(i,j) and entries(j,i) share storage.
class MetricField {
 public:
  MetricField() = default;
  MetricField(ChartPtr chart, const std::vector<std::vector<Expr>>& entries);
  static MetricField parse(ChartPtr chart, const std::vector<std::vector<std::string>>& texts);
  static MetricField diagonal(ChartPtr chart, const std::vector<Expr>& diag);

  const ChartPtr& chart() const { return chart_; }
  int dim() const { return chart_->dim(); }
  const Expr& entry(int i, int j) const { return entries_[index(i, j)]; }

  /// Numeric matrix g(p), row-major.
  std::vector<double> matrix(const Point& p) const;

 private:
  int index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return j * (j + 1) / 2 + i;
  }
  ChartPtr chart_;
  std::vector<Expr> entries_;
};

struct ExactInverse {};
struct PseudoInverse {
  double rank_tol = 1e-9;
};
/// Block-diagonal generalized inverse.  Each block uses the inverse of its
/// factor metric scaled by 1/s^2 where s is the warping (or 1 when absent).
struct ProductBlock {
  struct Block {
    int begin = 0;
    int end = 0;
    MetricField factor_metric;  // on the product chart, unscaled
    std::optional<ScalarField> warping;
  };
  std::vector<Block> blocks;
};
using CoMetricRule = std::variant<ExactInverse, PseudoInverse, ProductBlock>;

double metric_eval(const MetricField& g, const VectorField& X, const VectorField& Y, const Point& p);
VectorField lie_bracket(const VectorField& X, const VectorField& Y);
double cometric_apply(const MetricField& g, const CoMetricRule& rule, const CovectorField& w,
                      const CovectorField& e, const Point& p);

/// The generalized inverse G+ of g(p) under a rule, row-major.
std::vector<double> cometric_matrix(const MetricField& g, const CoMetricRule& rule, const Point& p);

/// Moore-Penrose inverse of a symmetric matrix.  Throws RankDeficiencyAmbiguous
/// when a singular value falls in the decade band around rank_tol * max.
std::vector<double> pseudo_inverse(const std::vector<double>& m, int n, double rank_tol);

/// Ordinary inverse; throws SingularMetric.
std::vector<double> exact_inverse(const std::vector<double>& m, int n);

// ------------------------------------------------------------ point data

/// Components of a vector field as jets at a point.
struct JetVec {
  std::vector<Jet2> c;
  int dim() const { return static_cast<int>(c.size()); }
  int order() const;
};

/// Metric entries as jets at a point (row-major, symmetric).
struct JetMetric {
  int n = 0;
  std::vector<Jet2> g;
  const Jet2& operator()(int i, int j) const { return g[i * n + j]; }
};

JetVec jet_of(const VectorField& X, const Point& p);
JetMetric jet_of(const MetricField& g, const Point& p);
JetVec coordinate_jet(int n, int index);
JetVec zero_jet(int n);

Jet2 pair(const JetMetric& g, const JetVec& X, const JetVec& Y);
/// X(f), one order lower than min(order(X), order(f)) allows.
Jet2 deriv(const JetVec& X, const Jet2& f);
JetVec bracket(const JetVec& X, const JetVec& Y);
JetVec scale(const Jet2& f, const JetVec& X);
JetVec add(const JetVec& X, const JetVec& Y);

}  // namespace kg
