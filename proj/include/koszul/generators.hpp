#pragma once

#include <vector>

#include "koszul/connections.hpp"
#include "koszul/manifold.hpp"
#include "koszul/random.hpp"

namespace kg {

/// Vector field with polynomial components (degree <= 2, coefficients in
/// [-1,1]) in the given variables; all chart variables when `vars` is empty.
VectorField random_vector_field(Rng& rng, const ChartPtr& chart, std::vector<int> vars = {});

/// Symmetric polynomial metric dominated by a diagonal of random signs.
/// `signs` fixes the signature when non-empty.
MetricField random_metric(Rng& rng, const ChartPtr& chart, std::vector<int> signs = {});

/// Diagonal polynomial metric, suitable for constant diagonal product structures.
MetricField random_diagonal_metric(Rng& rng, const ChartPtr& chart, std::vector<int> signs = {});

/// Smallest |singular value| / largest of g(p).
double conditioning(const MetricField& g, const Point& p);

/// Samples points until g is comfortably non-degenerate there.
Point random_regular_point(Rng& rng, const MetricField& g, double min_conditioning = 1e-3,
                           double shrink = 0.1);

/// A random constant almost product structure on a 2-block or general chart
/// together with a metric it is an isometry of.
struct StructuredMetric {
  MetricField g;
  ProductStructure J;
};
StructuredMetric random_structured_metric(Rng& rng, const ChartPtr& chart);

}  // namespace kg
