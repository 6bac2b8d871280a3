#include "koszul/random.hpp"

#include <cmath>

namespace kg {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ a);
  h = splitmix(h ^ b);
  return splitmix(h ^ c);
}

Expr random_polynomial(Rng& rng, const std::vector<int>& vars, int degree, double lo, double hi) {
  Expr e(rng.uniform(lo, hi));
  if (degree >= 1)
    for (int v : vars) e = e + Expr(rng.uniform(lo, hi)) * Expr::var(v);
  if (degree >= 2)
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i; j < vars.size(); ++j)
        e = e + Expr(rng.uniform(lo, hi)) * Expr::var(vars[i]) * Expr::var(vars[j]);
  return e;
}

std::vector<double> random_point(Rng& rng, const Chart& chart, double shrink) {
  std::vector<double> p;
  for (const auto& iv : chart.domain()) {
    double lo = iv.lo, hi = iv.hi;
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      lo = std::isfinite(lo) ? lo : (std::isfinite(hi) ? hi - 2.0 : -1.0);
      hi = std::isfinite(hi) ? hi : lo + 2.0;
    }
    const double w = hi - lo;
    p.push_back(rng.uniform(lo + shrink * w, hi - shrink * w));
  }
  return p;
}

}  // namespace kg
