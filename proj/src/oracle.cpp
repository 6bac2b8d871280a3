#include "koszul/oracle.hpp"

#include <Eigen/Dense>

#include "koszul/errors.hpp"

namespace kg::oracle {

namespace {

struct Derivs {
  int n = 0;
  Eigen::MatrixXd g, ginv;
  std::vector<double> dg;   // [m][i][j] = d_m g_ij
  std::vector<double> ddg;  // [m][l][i][j] = d_m d_l g_ij
  double d1(int m, int i, int j) const { return dg[(m * n + i) * n + j]; }
  double d2(int m, int l, int i, int j) const { return ddg[((m * n + l) * n + i) * n + j]; }
};

Derivs derivs(const MetricField& g, const Point& p) {
  Derivs d;
  const int n = d.n = g.dim();
  d.g.resize(n, n);
  d.dg.assign(n * n * n, 0.0);
  d.ddg.assign(n * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Jet2 e = eval_jet2(g.entry(i, j), p);
      d.g(i, j) = e.value;
      for (int m = 0; m < n; ++m) {
        d.dg[(m * n + i) * n + j] = e.grad(m);
        for (int l = 0; l < n; ++l) d.ddg[((m * n + l) * n + i) * n + j] = e.hess(m, l);
      }
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(d.g);
  if (!lu.isInvertible()) throw SingularMetric("Christoffel oracle needs an invertible metric");
  d.ginv = lu.inverse();
  return d;
}

}  // namespace

std::vector<double> christoffel_symbols(const MetricField& g, const Point& p) {
  const Derivs d = derivs(g, p);
  const int n = d.n;
  std::vector<double> gam(n * n * n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += d.ginv(k, l) * (d.d1(i, j, l) + d.d1(j, i, l) - d.d1(l, i, j));
        gam[(k * n + i) * n + j] = 0.5 * s;
      }
  return gam;
}

std::vector<double> riemann_components(const MetricField& g, const Point& p) {
  const Derivs d = derivs(g, p);
  const int n = d.n;
  const auto gam = christoffel_symbols(g, p);
  auto G = [&](int k, int i, int j) { return gam[(k * n + i) * n + j]; };

  // d_m g^{kl} = -g^{ka} d_m g_ab g^{bl}
  std::vector<double> dginv(n * n * n, 0.0);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) s -= d.ginv(k, a) * d.d1(m, a, b) * d.ginv(b, l);
        dginv[(m * n + k) * n + l] = s;
      }

  // d_m Gamma^k_ij
  std::vector<double> dgam(n * n * n * n, 0.0);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) {
            const double S = d.d1(i, j, l) + d.d1(j, i, l) - d.d1(l, i, j);
            const double dS = d.d2(m, i, j, l) + d.d2(m, j, i, l) - d.d2(m, l, i, j);
            s += dginv[(m * n + k) * n + l] * S + d.ginv(k, l) * dS;
          }
          dgam[((m * n + k) * n + i) * n + j] = 0.5 * s;
        }
  auto dG = [&](int m, int k, int i, int j) { return dgam[((m * n + k) * n + i) * n + j]; };

  std::vector<double> R(n * n * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::vector<double> up(n, 0.0);
        for (int e = 0; e < n; ++e) {
          double s = dG(a, e, b, c) - dG(b, e, a, c);
          for (int f = 0; f < n; ++f) s += G(f, b, c) * G(e, a, f) - G(f, a, c) * G(e, b, f);
          up[e] = s;
        }
        for (int dd = 0; dd < n; ++dd) {
          double s = 0.0;
          for (int e = 0; e < n; ++e) s += d.g(dd, e) * up[e];
          R[((a * n + b) * n + c) * n + dd] = s;
        }
      }
  return R;
}

double christoffel_riemann(const MetricField& g, const VectorField& X, const VectorField& Y,
                           const VectorField& Z, const VectorField& T, const Point& p) {
  const int n = g.dim();
  const auto R = riemann_components(g, p);
  const auto x = X.values(p), y = Y.values(p), z = Z.values(p), t = T.values(p);
  double s = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int dd = 0; dd < n; ++dd) s += x[a] * y[b] * z[c] * t[dd] * R[((a * n + b) * n + c) * n + dd];
  return s;
}

}  // namespace kg::oracle
