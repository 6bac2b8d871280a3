#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "koszul/curvature.hpp"
#include "koszul/errors.hpp"
#include "koszul/generators.hpp"
#include "koszul/oracle.hpp"

using namespace kg;

namespace {

ChartPtr plane() { return make_chart("R2", {"x", "y"}); }

ChartPtr random_chart(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return make_chart("C", names, std::vector<Interval>(n, {-1.0, 1.0}));
}

}  // namespace

TEST_CASE("riemann examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  CHECK(riemann(eu, ExactInverse{}, dx, dy, dy, dx, {0.2, 0.3}) == 0.0);

  auto m = make_chart("M", {"t", "u"});
  auto dt = VectorField::coordinate(m, 0), du = VectorField::coordinate(m, 1);
  auto polar = MetricField::parse(m, {{"1", "0"}, {"0", "t^2"}});
  CHECK(std::abs(riemann(polar, ExactInverse{}, dt, du, du, dt, {1.3, 0.0})) < 1e-14);
  CHECK(std::abs(oracle::christoffel_riemann(polar, dt, du, du, dt, {1.3, 0.0})) < 1e-14);

  auto s = make_chart("S2", {"th", "ph"});
  auto sphere = MetricField::parse(s, {{"1", "0"}, {"0", "sin(th)^2"}});
  auto dth = VectorField::coordinate(s, 0), dph = VectorField::coordinate(s, 1);
  const Point eq{std::numbers::pi / 2, 0.0};
  const double r = riemann(sphere, ExactInverse{}, dth, dph, dph, dth, eq);
  const double o = oracle::christoffel_riemann(sphere, dth, dph, dph, dth, eq);
  CHECK(std::abs(r) == doctest::Approx(1.0));
  CHECK(r == doctest::Approx(o));
  CHECK(r == doctest::Approx(1.0));
}

TEST_CASE("ssm_riemann examples") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  CHECK(ssm_riemann(eu, ExactInverse{}, dx, dx, dy, dy, dx, {0.1, 0.1}) == doctest::Approx(0.0));

  auto m = make_chart("M1", {"t", "u"});
  auto g = MetricField::parse(m, {{"-1", "0"}, {"0", "(t^2)^2"}});
  auto dt = VectorField::coordinate(m, 0), du = VectorField::coordinate(m, 1);
  const Point p{0.5, 0.0};
  CHECK(ssm_riemann(g, ExactInverse{}, dt, dt, du, du, dt, p) == doctest::Approx(-0.25));
  CHECK(ssnm_riemann(g, ExactInverse{}, dt, du, dt, du, dt, p) == doctest::Approx(1.0));
  // With J = id the J-term equals the first term, so the total is b b''.
  CHECK(ap_riemann(g, ExactInverse{}, ProductStructure::identity(m), dt, du, dt, du, p) ==
        doctest::Approx(0.5));

  // Two-dimensional fiber, J_F a reflection and g_F(V, J_F W) = 0: only (b/2) b'' g_F(V,W) remains.
  auto m2 = make_chart("M1", {"t", "u1", "u2"});
  auto g2 = MetricField::parse(m2, {{"-1", "0", "0"}, {"0", "(t^2)^2", "0"}, {"0", "0", "(t^2)^2"}});
  auto J = ProductStructure::constant(m2, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  auto dt2 = VectorField::coordinate(m2, 0);
  auto V = VectorField::parse(m2, {"0", "1", "1"});  // g_F(V,V) = 2
  CHECK(ap_riemann(g2, ExactInverse{}, J, dt2, V, dt2, V, {0.5, 0.0, 0.0}) / 2.0 ==
        doctest::Approx(0.25));
}

TEST_CASE("ap_riemann with a constant reflection on the plane is zero") {
  auto c = plane();
  auto eu = MetricField::parse(c, {{"1", "0"}, {"0", "1"}});
  auto J = ProductStructure::constant(c, {{1, 0}, {0, -1}});
  auto dx = VectorField::coordinate(c, 0), dy = VectorField::coordinate(c, 1);
  for (const auto* a : {&dx, &dy})
    for (const auto* b : {&dx, &dy})
      for (const auto* d : {&dx, &dy})
        for (const auto* e : {&dx, &dy})
          CHECK(ap_riemann(eu, ExactInverse{}, J, *a, *b, *d, *e, {0.0, 0.5}) == 0.0);
}

TEST_CASE("property: curvature symmetries and reductions (300 instances)") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    auto c = random_chart(2 + trial % 2);
    const StructuredMetric sm = random_structured_metric(rng, c);
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c),
         Z = random_vector_field(rng, c), T = random_vector_field(rng, c),
         P = random_vector_field(rng, c);
    const Point p = random_regular_point(rng, sm.g);
    const LocalGeometry plain(sm.g, ExactInverse{}, ConnectionSpec::plain(), p);
    const LocalGeometry ssm(sm.g, ExactInverse{}, ConnectionSpec::ssm(P), p);
    const LocalGeometry ssnm(sm.g, ExactInverse{}, ConnectionSpec::ssnm(P), p);
    const LocalGeometry ap(sm.g, ExactInverse{}, ConnectionSpec::ap(sm.J), p);
    const auto x = plain.field(X), y = plain.field(Y), z = plain.field(Z), t = plain.field(T);
    const double tol = 1e-8;
    for (const auto* lg : {&plain, &ssm, &ssnm, &ap})
      CHECK(std::abs(lg->curvature(x, y, z, t) + lg->curvature(y, x, z, t)) < tol);
    CHECK(std::abs(plain.curvature(x, y, z, t) + plain.curvature(x, y, t, z)) < tol);
    CHECK(std::abs(ap.curvature(x, y, z, t) + ap.curvature(x, y, t, z)) < tol);
    CHECK(std::abs(ssm.curvature(x, y, z, t) + ssm.curvature(x, y, t, z)) < tol);

    const VectorField zero = VectorField::zero(c);
    const LocalGeometry ssm0(sm.g, ExactInverse{}, ConnectionSpec::ssm(zero), p);
    const LocalGeometry ssnm0(sm.g, ExactInverse{}, ConnectionSpec::ssnm(zero), p);
    const LocalGeometry apid(sm.g, ExactInverse{}, ConnectionSpec::ap(ProductStructure::identity(c)), p);
    const double r = plain.curvature(x, y, z, t);
    CHECK(std::abs(ssm0.curvature(x, y, z, t) - r) <= 1e-12);
    CHECK(std::abs(ssnm0.curvature(x, y, z, t) - r) <= 1e-12);
    CHECK(std::abs(apid.curvature(x, y, z, t) - r) <= 1e-12);
  }
}

TEST_CASE("property: Koszul route agrees with the Christoffel oracle (100 metrics)") {
  Rng rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_chart(2 + trial % 2);
    auto g = random_metric(rng, c);
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c),
         Z = random_vector_field(rng, c), T = random_vector_field(rng, c);
    const Point p = random_regular_point(rng, g);
    const double r = riemann(g, ExactInverse{}, X, Y, Z, T, p);
    const double o = oracle::christoffel_riemann(g, X, Y, Z, T, p);
    CHECK(std::abs(r - o) <= 1e-8 * std::max(std::abs(o), 1e-2));
  }
}

TEST_CASE("R-hat is not antisymmetric in its last pair") {
  Rng rng(79);
  double worst = 0.0;
  for (int trial = 0; trial < 20 && worst < 1e-3; ++trial) {
    auto c = random_chart(2);
    auto g = random_metric(rng, c);
    auto P = random_vector_field(rng, c);
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c),
         Z = random_vector_field(rng, c), T = random_vector_field(rng, c);
    const Point p = random_regular_point(rng, g);
    const double a = ssnm_riemann(g, ExactInverse{}, P, X, Y, Z, T, p);
    const double b = ssnm_riemann(g, ExactInverse{}, P, X, Y, T, Z, p);
    worst = std::max(worst, std::abs(a + b));
  }
  CHECK(worst > 1e-3);
}
