#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "koszul/errors.hpp"
#include "koszul/generators.hpp"
#include "koszul/manifold.hpp"

using namespace kg;

namespace {

ChartPtr plane() { return make_chart("R2", {"x", "y"}); }
ChartPtr tu() { return make_chart("M", {"t", "u"}, {{0.0, 10.0}, {-5.0, 5.0}}); }

CovectorField covector(ChartPtr c, std::vector<double> w) { return {std::move(c), std::move(w)}; }

}  // namespace

TEST_CASE("metric_eval examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  CHECK(metric_eval(eu, VectorField::coordinate(c, 0), VectorField::coordinate(c, 1), {0.3, 0.4}) == 0.0);

  auto m = tu();
  auto g = MetricField::parse(m, {{"-1", "0"}, {"0", "t^2"}});
  auto dt = VectorField::coordinate(m, 0), du = VectorField::coordinate(m, 1);
  CHECK(metric_eval(g, dt, dt, {1.7, 0.0}) == -1.0);
  CHECK(metric_eval(g, du, du, {2.0, 0.0}) == 4.0);
  CHECK_THROWS_AS(metric_eval(g, VectorField::coordinate(plane(), 0), dt, {1.0, 0.0}), ChartMismatch);
}

TEST_CASE("asymmetric metric entries are rejected") {
  auto c = plane();
  CHECK_THROWS_AS(MetricField::parse(c, {{"1", "x"}, {"y", "1"}}), SpecMismatch);
}

TEST_CASE("lie_bracket examples") {
  auto c = plane();
  const Point p{0.6, -0.2};
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  auto b = lie_bracket(dx, dy);
  CHECK(b.values(p) == std::vector<double>{0.0, 0.0});

  auto xdy = VectorField::parse(c, {"0", "x"});
  b = lie_bracket(xdy, dx);
  CHECK(b.values(p) == std::vector<double>{0.0, -1.0});

  auto xdx = VectorField::parse(c, {"x", "0"});
  b = lie_bracket(xdx, xdy);
  CHECK(b.values(p)[0] == doctest::Approx(0.0));
  CHECK(b.values(p)[1] == doctest::Approx(0.6));
}

TEST_CASE("cometric_apply examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  CHECK(cometric_apply(eu, ExactInverse{}, covector(c, {1, 0}), covector(c, {1, 0}), {0, 0}) == 1.0);

  auto m = tu();
  auto g = MetricField::parse(m, {{"1", "0"}, {"0", "t^2"}});
  CHECK(cometric_apply(g, ExactInverse{}, covector(m, {0, 1}), covector(m, {0, 1}), {2.0, 0.0}) ==
        doctest::Approx(0.25));

  auto d = MetricField::parse(c, {{"1", "0"}, {"0", "0"}});
  CHECK(cometric_apply(d, PseudoInverse{1e-9}, covector(c, {0, 1}), covector(c, {0, 1}), {0, 0}) ==
        0.0);
  CHECK(cometric_apply(d, PseudoInverse{1e-9}, covector(c, {1, 0}), covector(c, {1, 0}), {0, 0}) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(cometric_apply(d, ExactInverse{}, covector(c, {0, 1}), covector(c, {0, 1}), {0, 0}),
                  SingularMetric);
}

TEST_CASE("pseudo-inverse matches Moore-Penrose identities") {
  const std::vector<double> m{2, 1, 0, 1, 2, 0, 0, 0, 0};
  const auto pinv = pseudo_inverse(m, 3, 1e-9);
  // A A+ A = A
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += m[i * 3 + k] * pinv[k * 3 + l] * m[l * 3 + j];
      CHECK(s == doctest::Approx(m[i * 3 + j]).epsilon(1e-12));
    }
  CHECK(pinv[0] == doctest::Approx(2.0 / 3.0));
  CHECK(pinv[8] == 0.0);
}

TEST_CASE("pseudo-inverse reports singular values near the cutoff") {
  const std::vector<double> m{1, 0, 0, 1e-9};
  CHECK_THROWS_AS(pseudo_inverse(m, 2, 1e-9), RankDeficiencyAmbiguous);
  CHECK_NOTHROW(pseudo_inverse(std::vector<double>{1, 0, 0, 1e-6}, 2, 1e-9));
  CHECK_NOTHROW(pseudo_inverse(std::vector<double>{1, 0, 0, 1e-13}, 2, 1e-9));
}

TEST_CASE("point outside the domain names the coordinate") {
  auto m = tu();
  try {
    m->check_point({-1.0, 0.0});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("coordinate t") != std::string::npos);
  }
}

TEST_CASE("property: metric_eval bilinearity (500 instances)") {
  Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto c = make_chart("C", names, std::vector<Interval>(n, {-1.0, 1.0}));
    auto g = random_metric(rng, c);
    auto X1 = random_vector_field(rng, c), X2 = random_vector_field(rng, c);
    auto Y = random_vector_field(rng, c);
    const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
    VectorField S = VectorField::zero(c);
    for (int i = 0; i < n; ++i)
      S.components[i] = Expr(a) * X1.components[i] + Expr(b) * X2.components[i];
    const Point p = random_point(rng, *c);
    const double lhs = metric_eval(g, S, Y, p);
    const double rhs = a * metric_eval(g, X1, Y, p) + b * metric_eval(g, X2, Y, p);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    CHECK(metric_eval(g, Y, S, p) == doctest::Approx(lhs).epsilon(1e-12));
  }
}

TEST_CASE("property: bracket antisymmetry and Jacobi identity (200 points)") {
  Rng rng(102);
  auto c = make_chart("C", {"a", "b", "c"}, std::vector<Interval>(3, {-1.0, 1.0}));
  for (int trial = 0; trial < 200; ++trial) {
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c),
         Z = random_vector_field(rng, c);
    const Point p = random_point(rng, *c);
    const auto xy = lie_bracket(X, Y).values(p), yx = lie_bracket(Y, X).values(p);
    const auto j1 = lie_bracket(X, lie_bracket(Y, Z)).values(p);
    const auto j2 = lie_bracket(Y, lie_bracket(Z, X)).values(p);
    const auto j3 = lie_bracket(Z, lie_bracket(X, Y)).values(p);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(xy[k] + yx[k]) < 1e-12);
      CHECK(std::abs(j1[k] + j2[k] + j3[k]) < 1e-9);
    }
  }
}

TEST_CASE("property: cometric of flattened vectors recovers the metric") {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto c = make_chart("C", names, std::vector<Interval>(n, {-1.0, 1.0}));
    auto g = random_metric(rng, c);
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c);
    const Point p = random_regular_point(rng, g);
    const auto m = g.matrix(p);
    const auto x = X.values(p), y = Y.values(p);
    CovectorField fx{c, std::vector<double>(n, 0.0)}, fy{c, std::vector<double>(n, 0.0)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) fx.components[i] += m[i * n + j] * x[j], fy.components[i] += m[i * n + j] * y[j];
    const double want = metric_eval(g, X, Y, p);
    const double got = cometric_apply(g, ExactInverse{}, fx, fy, p);
    CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
  }
}
