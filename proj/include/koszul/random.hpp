#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "koszul/chart.hpp"
#include "koszul/expr.hpp"

namespace kg {

/// Seeded generator with platform-independent real sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  int index(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (eng_() >> 63) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Derives an independent stream seed from a base seed and labels.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

/// Random polynomial of total degree <= degree in the listed variables,
/// coefficients uniform in [lo, hi].
Expr random_polynomial(Rng& rng, const std::vector<int>& vars, int degree = 2, double lo = -1.0,
                       double hi = 1.0);

/// Uniform point in the domain box shrunk by `shrink` of its width at each end.
/// Infinite intervals are replaced by (-1, 1).
std::vector<double> random_point(Rng& rng, const Chart& chart, double shrink = 0.1);

}  // namespace kg
