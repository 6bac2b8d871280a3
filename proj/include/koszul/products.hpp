#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/connections.hpp"
#include "koszul/curvature.hpp"
#include "koszul/manifold.hpp"

namespace kg {

enum class ProductKind { MultiplyWarped, Twisted };

const char* to_string(ProductKind k);

/// Factor index: 0 is the base, j >= 1 is fiber j.
using FactorTag = int;
inline constexpr FactorTag kBase = 0;

struct FactorData {
  ChartPtr chart;
  MetricField metric;
};

struct MultiplyWarpedSpec {
  FactorData base;
  std::vector<FactorData> fibers;
  /// b_j as scalar fields whose variables are base coordinates (matched by name).
  std::vector<ScalarField> warpings;
};

struct TwistedSpec {
  FactorData base;
  FactorData fiber;
  /// b on any chart whose coordinate names are drawn from base and fiber.
  ScalarField twisting;
};

struct Factor {
  ChartPtr chart;
  MetricField metric;
  int begin = 0;
  int end = 0;
  int dim() const { return end - begin; }
};

struct LiftedField {
  VectorField field;  // on the product chart
  FactorTag tag = kBase;
  VectorField local;  // on the factor chart
};

class ProductManifold {
 public:
  ProductKind kind = ProductKind::MultiplyWarped;
  ChartPtr chart;
  MetricField metric;
  ProductBlock cometric;
  std::vector<Factor> factors;          // [0] base, [j] fiber j
  std::vector<ScalarField> warpings;    // [j-1] = b_j on the product chart
  std::vector<FactorTag> factor_map;    // product coordinate -> factor

  int fiber_count() const { return static_cast<int>(factors.size()) - 1; }
  const Factor& factor(FactorTag tag) const;
  const ScalarField& warping(int j) const;

  Point project(const Point& p, FactorTag tag) const;
  /// Accepts a field on the factor chart or an already embedded field on the
  /// product chart; the latter must respect the factor block.
  LiftedField lift(const VectorField& v, FactorTag tag) const;
  /// Embeds a factor expression in the product chart.
  Expr embed(const Expr& e, FactorTag tag) const;
  /// Block-diagonal J from one structure per factor.
  ProductStructure lift_structure(const std::vector<ProductStructure>& per_factor) const;
};

ProductManifold build_multiply_warped(const MultiplyWarpedSpec& spec);
ProductManifold build_twisted(const TwistedSpec& spec);

/// Factor-intrinsic Koszul form and curvature at the projected point.  The
/// connection spec, when given, lives on the factor chart.
double factor_koszul(const ProductManifold& M, FactorTag tag, const LiftedField& X,
                     const LiftedField& Y, const LiftedField& Z, const Point& p,
                     const ConnectionSpec& spec = ConnectionSpec::plain());
double factor_riemann(const ProductManifold& M, FactorTag tag, const LiftedField& X,
                      const LiftedField& Y, const LiftedField& Z, const LiftedField& T,
                      const Point& p, const ConnectionSpec& spec = ConnectionSpec::plain());

}  // namespace kg
