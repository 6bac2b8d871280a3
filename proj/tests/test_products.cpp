#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "koszul/curvature.hpp"
#include "koszul/errors.hpp"
#include "koszul/generators.hpp"
#include "koszul/products.hpp"

using namespace kg;

namespace {

double entry(const MetricField& g, int i, int j, const Point& p) { return eval_value(g.entry(i, j), p); }

FactorData line(const std::string& name, const std::string& coord, const std::string& g) {
  auto c = make_chart(name, {coord});
  return {c, MetricField::parse(c, {{g}})};
}

ChartPtr box(const std::string& name, const std::vector<std::string>& coords) {
  return make_chart(name, coords, std::vector<Interval>(coords.size(), {-1.0, 1.0}));
}

}  // namespace

TEST_CASE("warped product metric") {
  auto B = line("B", "t", "-1");
  auto F = line("F", "u", "1");
  auto M = build_multiply_warped({B, {F}, {ScalarField::parse(B.chart, "t")}});
  const Point p{0.7, 0.3};
  CHECK(entry(M.metric, 0, 0, p) == -1.0);
  CHECK(entry(M.metric, 1, 1, p) == doctest::Approx(0.49));
  CHECK(entry(M.metric, 0, 1, p) == 0.0);
  // degenerate at t = 0 and still constructible
  CHECK(entry(M.metric, 1, 1, {0.0, 0.3}) == 0.0);
}

TEST_CASE("kasner metric") {
  auto B = line("B", "t", "-1");
  auto F1 = line("F1", "u", "1");
  auto F2 = line("F2", "v", "1");
  auto M = build_multiply_warped(
      {B, {F1, F2}, {ScalarField::parse(B.chart, "t^0.4"), ScalarField::parse(B.chart, "t^(-0.6)")}});
  const Point p{1.3, 0.1, 0.2};
  CHECK(entry(M.metric, 1, 1, p) == doctest::Approx(std::pow(1.3, 0.8)));
  CHECK(entry(M.metric, 2, 2, p) == doctest::Approx(std::pow(1.3, -1.2)));
  CHECK(M.factor_map == std::vector<FactorTag>{0, 1, 2});
}

TEST_CASE("warping on fiber coordinates is rejected") {
  auto B = line("B", "t", "-1");
  auto F = line("F", "u", "1");
  auto all = make_chart("BF", {"t", "u"});
  CHECK_THROWS_AS(build_multiply_warped({B, {F}, {ScalarField::parse(all, "t*u")}}), SpecMismatch);
  CHECK_THROWS_AS(build_multiply_warped({B, {F}, {}}), SpecMismatch);
}

TEST_CASE("twisted product metric") {
  auto B = line("B", "t", "1");
  auto F = line("F", "u", "1");
  auto all = make_chart("BF", {"t", "u"});
  auto M = build_twisted({B, F, ScalarField::parse(all, "t*(1 + u^2)")});
  const Point p{0.6, -0.4};
  const double b = 0.6 * 1.16;
  CHECK(entry(M.metric, 0, 0, p) == 1.0);
  CHECK(entry(M.metric, 1, 1, p) == doctest::Approx(b * b));
}

TEST_CASE("twisting without fiber dependence matches the warped metric") {
  auto B = line("B", "t", "-1");
  auto F = line("F", "u", "1 + u^2");
  auto all = make_chart("BF", {"t", "u"});
  auto T = build_twisted({B, F, ScalarField::parse(all, "1 + t^2")});
  auto W = build_multiply_warped({B, {F}, {ScalarField::parse(B.chart, "1 + t^2")}});
  for (double t : {0.1, 0.5, 1.7})
    for (double u : {-0.8, 0.0, 0.4})
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          CHECK(entry(T.metric, i, j, {t, u}) == doctest::Approx(entry(W.metric, i, j, {t, u})).epsilon(1e-14));
}

TEST_CASE("degenerate twisted product on (0,1)") {
  auto B = FactorData{make_chart("I", {"t"}, {{0.0, 1.0}}), {}};
  B.metric = MetricField::parse(B.chart, {{"-1"}});
  auto Fc = box("F", {"u", "v"});
  FactorData F{Fc, MetricField::parse(Fc, {{"1", "0"}, {"0", "1"}})};
  auto all = make_chart("IxF", {"t", "u", "v"});
  auto M = build_twisted({B, F, ScalarField::parse(all, "t*(1 + u^2/4 + v/5)")});
  const Point p{0.5, 0.2, -0.3};
  const double b = 0.5 * (1 + 0.01 - 0.06);
  CHECK(entry(M.metric, 0, 0, p) == -1.0);
  CHECK(entry(M.metric, 1, 1, p) == doctest::Approx(b * b));
  CHECK(entry(M.metric, 2, 2, p) == doctest::Approx(b * b));
}

TEST_CASE("lift examples") {
  auto B = line("B", "t", "-1");
  auto F1 = line("F1", "u", "1");
  auto F2 = line("F2", "v", "1");
  auto M = build_multiply_warped(
      {B, {F1, F2}, {ScalarField::parse(B.chart, "t"), ScalarField::parse(B.chart, "t^2")}});
  const Point p{0.5, 0.1, 0.2};

  auto du = M.lift(VectorField::coordinate(F1.chart, 0), 1);
  CHECK(du.tag == 1);
  CHECK(du.field.values(p) == std::vector<double>{0.0, 1.0, 0.0});

  auto tdt = M.lift(VectorField::parse(B.chart, {"t"}), kBase);
  CHECK(tdt.tag == kBase);
  CHECK(tdt.field.values(p) == std::vector<double>{0.5, 0.0, 0.0});

  // base component depending on a fiber coordinate
  auto bad = VectorField::parse(M.chart, {"u", "0", "0"});
  CHECK_THROWS_AS(M.lift(bad, kBase), SpecMismatch);
  CHECK_THROWS_AS(M.lift(VectorField::coordinate(F1.chart, 0), 5), UnknownFactor);
  CHECK_THROWS_AS(M.lift(VectorField::coordinate(F2.chart, 0), 1), ChartMismatch);
}

TEST_CASE("factor quantities") {
  auto B = line("B", "t", "-1");
  auto Sc = make_chart("S", {"th", "ph"}, {{0.1, 3.0}, {-3.0, 3.0}});
  FactorData S{Sc, MetricField::parse(Sc, {{"1", "0"}, {"0", "sin(th)^2"}})};
  auto Ec = box("E", {"x", "y"});
  FactorData E{Ec, MetricField::parse(Ec, {{"1", "0"}, {"0", "1"}})};
  auto M = build_multiply_warped(
      {B, {S, E}, {ScalarField::parse(B.chart, "1 + t^2"), ScalarField::parse(B.chart, "2 - t")}});
  const Point p{0.4, 1.1, 0.3, 0.2, -0.5};
  auto dth = M.lift(VectorField::coordinate(Sc, 0), 1), dph = M.lift(VectorField::coordinate(Sc, 1), 1);
  auto dx = M.lift(VectorField::coordinate(Ec, 0), 2), dy = M.lift(VectorField::coordinate(Ec, 1), 2);
  auto dt = M.lift(VectorField::coordinate(B.chart, 0), kBase);

  CHECK(factor_riemann(M, 2, dx, dy, dy, dx, p) == 0.0);
  CHECK(factor_riemann(M, kBase, dt, dt, dt, dt, p) == 0.0);
  const double standalone =
      riemann(S.metric, ExactInverse{}, VectorField::coordinate(Sc, 0), VectorField::coordinate(Sc, 1),
              VectorField::coordinate(Sc, 1), VectorField::coordinate(Sc, 0), M.project(p, 1));
  CHECK(factor_riemann(M, 1, dth, dph, dph, dth, p) == doctest::Approx(standalone).epsilon(1e-14));
  CHECK(standalone == doctest::Approx(std::sin(1.1) * std::sin(1.1)));
  CHECK_THROWS_AS(factor_riemann(M, 1, dth, dx, dph, dth, p), SpecMismatch);
}

TEST_CASE("flat-block singularity") {
  auto B = line("B", "t", "-1");
  auto Fc = box("F", {"u"});
  FactorData F{Fc, MetricField::parse(Fc, {{"u^2"}})};
  auto M = build_multiply_warped({B, {F}, {ScalarField::parse(B.chart, "1 + t")}});
  auto du = M.lift(VectorField::coordinate(Fc, 0), 1);
  CHECK_THROWS_AS(factor_riemann(M, 1, du, du, du, du, {0.3, 0.0}), SingularMetric);
}

// ---------------------------------------------------------------- properties

TEST_CASE("block structure, lift naturality and block contraction") {
  for (int trial = 0; trial < 60; ++trial) {
    Rng rng(mix_seed(11, trial, 0, 0));
    const bool twisted = trial % 2 == 1;
    auto Bc = box("B", {"t", "s"});
    const FactorData B{Bc, random_metric(rng, Bc)};
    std::vector<FactorData> fibers;
    std::vector<ChartPtr> fc;
    const int m = twisted ? 1 : 1 + trial % 3;
    for (int j = 1; j <= m; ++j) {
      const std::string a = "u" + std::to_string(j), b = "v" + std::to_string(j);
      fc.push_back(box("F" + std::to_string(j), {a, b}));
      fibers.push_back({fc.back(), random_metric(rng, fc.back())});
    }
    ProductManifold M;
    if (twisted) {
      auto all = box("BF", {"t", "s", "u1", "v1"});
      M = build_twisted({B, fibers[0], ScalarField::parse(all, "1.5 + t*u1/3 + s^2/4 - v1/5")});
    } else {
      MultiplyWarpedSpec spec{B, fibers, {}};
      for (int j = 0; j < m; ++j)
        spec.warpings.push_back({Bc, Expr(1.5) + random_polynomial(rng, {0, 1}, 2, -0.3, 0.3)});
      M = build_multiply_warped(spec);
    }
    Point p = random_regular_point(rng, B.metric, 1e-2);
    for (int j = 0; j < m; ++j) {
      const Point q = random_regular_point(rng, fibers[j].metric, 1e-2);
      p.insert(p.end(), q.begin(), q.end());
    }
    const int n = M.chart->dim();

    // block diagonal, fiber blocks scaled by b_j^2
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const FactorTag ti = M.factor_map[i], tk = M.factor_map[k];
        const double gik = entry(M.metric, i, k, p);
        if (ti != tk) {
          CHECK(gik == 0.0);
          continue;
        }
        const Factor& f = M.factor(ti);
        const double local = entry(f.metric, i - f.begin, k - f.begin, M.project(p, ti));
        const double scale = ti == kBase ? 1.0 : std::pow(M.warping(ti)(p), 2);
        CHECK(std::abs(gik - scale * local) <= 1e-12 * (1.0 + std::abs(gik)));
      }

    // g(lift u, lift v) = b_j^2 g_Fj(u, v)
    for (int j = 1; j <= m; ++j) {
      auto u = random_vector_field(rng, fc[j - 1]), v = random_vector_field(rng, fc[j - 1]);
      const double lhs = metric_eval(M.metric, M.lift(u, j).field, M.lift(v, j).field, p);
      const double rhs = std::pow(M.warping(j)(p), 2) * metric_eval(fibers[j - 1].metric, u, v, M.project(p, j));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }

    // ProductBlock agrees with the full inverse
    const auto block = cometric_matrix(M.metric, M.cometric, p);
    const auto full = cometric_matrix(M.metric, ExactInverse{}, p);
    double scale = 0.0, err = 0.0;
    for (size_t a = 0; a < full.size(); ++a) {
      scale = std::max(scale, std::abs(full[a]));
      err = std::max(err, std::abs(block[a] - full[a]));
    }
    CHECK(err <= 1e-10 * scale);
  }
}
