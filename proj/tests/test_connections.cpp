#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "koszul/connections.hpp"
#include "koszul/errors.hpp"
#include "koszul/generators.hpp"

using namespace kg;

namespace {

ChartPtr plane() { return make_chart("R2", {"x", "y"}); }

VectorField times(const Expr& f, const VectorField& X) {
  VectorField r = X;
  for (auto& c : r.components) c = f * c;
  return r;
}

double directional(const VectorField& X, const Expr& f, const Point& p) {
  const Jet2 j = eval_jet2(f, p);
  const auto x = X.values(p);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * j.grad(static_cast<int>(i));
  return s;
}

Expr pair_expr(const MetricField& g, const VectorField& X, const VectorField& Y) {
  Expr s(0.0);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) s = s + g.entry(i, j) * X.components[i] * Y.components[j];
  return s;
}

}  // namespace

TEST_CASE("koszul examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  for (const auto* a : {&dx, &dy})
    for (const auto* b : {&dx, &dy})
      for (const auto* d : {&dx, &dy}) CHECK(koszul(eu, *a, *b, *d, {0.1, 0.2}) == 0.0);

  auto m = make_chart("M", {"t", "u"});
  auto dt = VectorField::coordinate(m, 0), du = VectorField::coordinate(m, 1);
  auto g = MetricField::parse(m, {{"1", "0"}, {"0", "t^2"}});
  CHECK(koszul(g, dt, du, du, {2.0, 0.0}) == doctest::Approx(2.0));

  auto tw = MetricField::parse(m, {{"1", "0"}, {"0", "(t*(1 + u^2))^2"}});
  CHECK(koszul(tw, dt, du, du, {0.5, 1.0}) == doctest::Approx(2.0));
}

TEST_CASE("ssm and ssnm examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  CHECK(ssm_koszul(eu, dx, dy, dx, dy, {0, 0}) == 1.0);
  CHECK(ssm_koszul(eu, dx, dx, dx, dx, {0, 0}) == 0.0);
  CHECK(ssnm_koszul(eu, dx, dy, dx, dy, {0, 0}) == 1.0);
  CHECK(ssnm_koszul(eu, VectorField::zero(c), dy, dx, dy, {0, 0}) == koszul(eu, dy, dx, dy, {0, 0}));

  // I x_b F with g = -dt^2 + b^2 du^2, b = t, P = d/dt
  auto m = make_chart("M1", {"t", "u"});
  auto g = MetricField::parse(m, {{"-1", "0"}, {"0", "t^2"}});
  auto dt = VectorField::coordinate(m, 0);
  auto V = VectorField::parse(m, {"0", "0.5"});
  auto W = VectorField::parse(m, {"0", "2"});  // g_F(V,W) = 1 for g_F = du^2
  CHECK(ssm_koszul(g, dt, V, dt, W, {2.0, 0.0}) == doctest::Approx(-2.0));
  CHECK(ssnm_koszul(g, dt, dt, dt, dt, {0.7, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("ap examples") {
  auto m = make_chart("M", {"t", "u"});
  auto g = MetricField::parse(m, {{"1", "0"}, {"0", "t^2"}});
  auto dt = VectorField::coordinate(m, 0), du = VectorField::coordinate(m, 1);
  auto id = ProductStructure::identity(m);
  CHECK(ap_koszul(g, id, dt, du, du, {3.0, 0.0}) == doctest::Approx(3.0));
  CHECK(ap_koszul(g, id, du, dt, du, {3.0, 0.0}) == koszul(g, du, dt, du, {3.0, 0.0}));

  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  auto J = ProductStructure::constant(c, {{1, 0}, {0, -1}});
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  CHECK(ap_koszul(eu, J, dx, dy, dx, {0.3, 0.1}) == 0.0);
  auto bad = ProductStructure::constant(c, {{2, 0}, {0, 1}});
  CHECK_THROWS_AS(ap_koszul(eu, bad, dx, dy, dx, {0, 0}), InvalidStructure);
}

TEST_CASE("lower covariant derivative examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  auto w = lower_cov_deriv(eu, ConnectionSpec::plain(), dx, dy, {0.4, 0.4});
  CHECK(w.components == std::vector<double>{0.0, 0.0});
  w = lower_cov_deriv(eu, ConnectionSpec::ssm(dx), dy, dx, {0.4, 0.4});
  CHECK(w.components == std::vector<double>{0.0, 1.0});

  auto m = make_chart("M", {"t", "u"});
  auto g = MetricField::parse(m, {{"1", "0"}, {"0", "t^2"}});
  w = lower_cov_deriv(g, ConnectionSpec::plain(), VectorField::coordinate(m, 0),
                      VectorField::coordinate(m, 1), {2.0, 0.0});
  CHECK(w.components[0] == doctest::Approx(0.0));
  CHECK(w.components[1] == doctest::Approx(2.0));
}

TEST_CASE("connection spec validation") {
  auto c = plane();
  ConnectionSpec s;
  s.kind = ConnectionKind::SemiSymMetric;
  CHECK_THROWS_AS(s.validate(), SpecMismatch);
  s = ConnectionSpec::plain();
  s.J = ProductStructure::identity(c);
  CHECK_THROWS_AS(s.validate(), SpecMismatch);
}

TEST_CASE("validate_structure examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  const std::vector<Point> pts{{0, 0}, {0.5, -0.3}};
  auto r = validate_structure(eu, ProductStructure::identity(c), pts);
  CHECK(r.pass);
  CHECK(r.involution_residual == 0.0);
  CHECK(r.isometry_residual == 0.0);
  r = validate_structure(eu, ProductStructure::constant(c, {{1, 0}, {0, -1}}), pts);
  CHECK(r.pass);
  r = validate_structure(eu, ProductStructure::constant(c, {{2, 0}, {0, 1}}), pts);
  CHECK_FALSE(r.pass);
  CHECK(r.involution_residual == 3.0);
}

TEST_CASE("property: Koszul identities (500 instances each)") {
  Rng rng(2024);
  int done = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto c = make_chart("C", names, std::vector<Interval>(n, {-1.0, 1.0}));
    const StructuredMetric sm = random_structured_metric(rng, c);
    const MetricField& g = sm.g;
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c),
         Z = random_vector_field(rng, c), P = random_vector_field(rng, c);
    const Expr f = random_polynomial(rng, [&] {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = i;
      return v;
    }());
    const Point p = random_regular_point(rng, g);
    const double tol = 1e-9;
    const double xg = directional(X, pair_expr(g, Y, Z), p);
    const double gYP = metric_eval(g, Y, P, p), gXZ = metric_eval(g, X, Z, p),
                 gXY = metric_eval(g, X, Y, p), gPZ = metric_eval(g, P, Z, p),
                 gXP = metric_eval(g, X, P, p), gYZ = metric_eval(g, Y, Z, p),
                 gZP = metric_eval(g, Z, P, p);
    const double gZxy = metric_eval(g, Z, lie_bracket(X, Y), p);

    CHECK(std::abs(koszul(g, X, Y, Z, p) + koszul(g, X, Z, Y, p) - xg) < tol);
    CHECK(std::abs(koszul(g, X, Y, Z, p) - koszul(g, Y, X, Z, p) - gZxy) < tol);
    CHECK(std::abs(ssm_koszul(g, P, X, Y, Z, p) + ssm_koszul(g, P, X, Z, Y, p) - xg) < tol);
    CHECK(std::abs(ssm_koszul(g, P, X, Y, Z, p) - ssm_koszul(g, P, Y, X, Z, p) -
                   (gZxy + gYP * gXZ - gXP * gYZ)) < tol);
    CHECK(std::abs(ssnm_koszul(g, P, X, Y, Z, p) + ssnm_koszul(g, P, X, Z, Y, p) -
                   (xg + gYP * gXZ + gZP * gXY)) < tol);
    CHECK(std::abs(ap_koszul(g, sm.J, X, Y, Z, p) -
                   ap_koszul(g, sm.J, X, sm.J.apply(Y), sm.J.apply(Z), p)) < tol);
    CHECK(std::abs(koszul(g, times(f, X), Y, Z, p) - eval_value(f, p) * koszul(g, X, Y, Z, p)) < tol);
    CHECK(std::abs(koszul(g, X, times(f, Y), Z, p) -
                   (eval_value(f, p) * koszul(g, X, Y, Z, p) + directional(X, f, p) * gYZ)) < tol);
    ++done;
  }
  CHECK(done == 500);
}
