#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/catalog.hpp"
#include "koszul/curvature.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/verify.hpp"

namespace kg {

/// A manifold spec document (JSON).  Sections, all optional:
///
///   charts      [{name, coords: [..], domain: [[lo,hi], ..]}]
///   metrics     [{name, chart, matrix: [[expr, ..], ..]} | {name, chart, diagonal: [expr, ..]}]
///   fields      [{name, chart, components: [expr, ..]}]
///   structures  [{name, chart, matrix: [[number, ..], ..]}]
///   connections [{name, kind: plain|ssm|ssnm|ap, P: field, J: [structure per factor]}]
///   products    [{name, kind: warped, base: {chart, metric}, fibers: [{chart, metric, warping}]}
///                {name, kind: twisted, base: {chart, metric}, fiber: {chart, metric}, twisting}]
///   fixtures    [{name, fixture: M1..M4, b | phi + p: [..], fibers: [{chart, metric}]}]
///   verify      {seed, n, tol_rel, tol_abs, degenerate_limit: {hypothesis, counterexample}}
///
/// Every field also gets coordinate fields named d<coord>.  Bad documents
/// throw SpecError (or the parse error of the offending expression).
class SpecFile {
 public:
  static SpecFile parse(const std::string& text);
  static SpecFile load(const std::string& path);

  struct Space {
    std::string name;
    std::optional<MetricField> metric;        // plain chart and metric
    std::optional<ProductManifold> product;   // product or fixture
    std::vector<std::string> factor_charts;   // chart names per factor
    std::string fixture;                      // M1..M4 when built from a fixture
    FixtureParams params;
    ChartPtr chart() const { return product ? product->chart : metric->chart(); }
  };

  struct Connection {
    ConnectionKind kind = ConnectionKind::Plain;
    std::string P;
    std::vector<std::string> J;
  };

  const Space& space(const std::string& name) const;
  const Connection& connection(const std::string& name) const;
  /// A declared field, or d<coord> for a coordinate of `chart`.
  VectorField field(const std::string& name, const ChartPtr& chart) const;
  /// Chart a field name lives on (declared chart or the chart holding the coordinate).
  std::string field_chart(const std::string& name, const Space& on) const;
  const ProductStructure& structure(const std::string& name) const;

  std::vector<std::string> space_names() const;
  /// Verify defaults and fixture parameters from the document.
  VerifyOptions verify_options() const { return verify_; }

 private:
  std::map<std::string, ChartPtr> charts_;
  std::map<std::string, MetricField> metrics_;
  std::map<std::string, std::pair<std::string, VectorField>> fields_;
  std::map<std::string, ProductStructure> structures_;
  std::map<std::string, Connection> connections_;
  std::map<std::string, Space> spaces_;
  VerifyOptions verify_;

  ChartPtr chart_ref(const std::string& name) const;
  const MetricField& metric_ref(const std::string& name) const;
};

/// Quantities eval understands.
enum class Quantity { Koszul, Curvature, Contraction };

struct EvalRequest {
  std::string on;
  std::string object;               // koszul, ssm-koszul, ..., riemann, ssm-curvature, ..., contraction
  std::vector<std::string> args;
  std::string point;                // "t=0.5,u=0" or "0.5,0"
  std::string connection;           // optional named connection
  std::string P;                    // overrides the connection's P
  std::vector<std::string> J;       // overrides the connection's J
  bool catalog = false;             // closed form instead of the definitions
};

struct EvalResult {
  double value = 0.0;
  std::string key;   // catalog key for product spaces
  std::string item;  // catalog item used, when catalog = true
};

/// Parses an object name: returns the connection kind and quantity, or throws SpecError.
std::pair<ConnectionKind, Quantity> parse_object(const std::string& name);
/// Parses a point against a chart; throws SpecError on missing or unknown coordinates.
Point parse_point(const std::string& text, const Chart& chart);

/// Throws DomainError / SingularMetric for bad points, SpecError for bad requests.
EvalResult evaluate(const SpecFile& spec, const EvalRequest& req);

}  // namespace kg
