#pragma once

#include <vector>

#include "koszul/manifold.hpp"

namespace kg::oracle {

/// Gamma^k_ij at p, indexed [k*n*n + i*n + j].  Requires g(p) invertible.
std::vector<double> christoffel_symbols(const MetricField& g, const Point& p);

/// Fully lowered curvature R_abcd = g(R(d_a,d_b)d_c, d_d) with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
/// built from Christoffel symbols and their first derivatives.
std::vector<double> riemann_components(const MetricField& g, const Point& p);

double christoffel_riemann(const MetricField& g, const VectorField& X, const VectorField& Y,
                           const VectorField& Z, const VectorField& T, const Point& p);

}  // namespace kg::oracle
