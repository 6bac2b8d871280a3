#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "koszul/curvature.hpp"
#include "koszul/errors.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/verify.hpp"

using namespace kg;

namespace {

const catalog::Row& fixture_row(const std::string& id) {
  for (const auto& r : catalog::fixture_rows())
    if (r.id == id) return r;
  FAIL("no fixture row " << id);
  throw 0;
}

const catalog::Item& item_of(const catalog::Row& r, const std::string& ordinal) {
  for (const auto& it : r.items)
    if (it.ordinal == ordinal) return it;
  FAIL("no item " << ordinal);
  throw 0;
}

struct Three {
  double oracle, printed, general;
  bool covered;
};

Three three_way(const catalog::Row& row, const catalog::Item& item, const CatalogInstance& inst) {
  const ClosedForm cf = closed_form(inst.key, inst.M, inst.args, inst.aux, inst.p);
  return {oracle_value(row, inst), catalog::evaluate(row, item, 0, {}, inst.M, inst.args, inst.aux, inst.p),
          cf.value, cf.covered};
}

double gF(const CatalogInstance& inst, int a, int b) {
  return metric_eval(inst.M.factor(1).metric, inst.args[a].local, inst.args[b].local, inst.M.project(inst.p, 1));
}

// fixture items failing against the definitions, printed or through the general table
const std::set<std::string> kFindings = {
    "M1/ssm-curvature/P-fiber (6)",   "M2/ssm-koszul/P-fiber (9)",      "M2/ssm-curvature/P-base (11)",
    "M2/ssm-curvature/P-fiber (9)",   "M2/ssm-curvature/P-fiber (14)",  "M2/ssnm-curvature/P-fiber (9)",
    "M2/ssnm-curvature/P-fiber (17)", "M2/ssnm-curvature/P-fiber (18)", "M3/ssm-koszul/P-fiber (9)",
    "M3/ssm-curvature/P-base (11)",   "M3/ssm-curvature/P-fiber (9)",   "M3/ssm-curvature/P-fiber (15)",
    "M3/ssnm-curvature/P-fiber (9)",  "M3/ap-curvature (11)",           "M4/ssm-curvature/P-base (6)",
    "M4/ssnm-curvature/P-base (7)",   "M4/ap-curvature (7)",
};

}  // namespace

TEST_CASE("fixture lookup") {
  CHECK(fixtures().size() == 4);
  CHECK(fixture("M3").fiber_dims == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(fixture("M5"), UnknownFixture);
  CHECK_THROWS_AS(fixture_rows_of("Kasner"), UnknownFixture);
  CHECK(fixture_rows_of("M4").size() == 10);
}

TEST_CASE("fixture warpings") {
  CHECK(fixture_warpings(fixture("M1"), {"t^2", "", {}}) == std::vector<std::string>{"t^2"});
  CHECK(fixture_warpings(fixture("M2"), {"", "t", {0.5, -1}}) ==
        std::vector<std::string>{"(t)^(0.5)", "(t)^(-1)"});
  CHECK_THROWS_AS(fixture_warpings(fixture("M2"), {"", "t", {0.5}}), SpecError);
  CHECK_THROWS_AS(fixture_warpings(fixture("M1"), {"", "t", {}}), SpecError);
}

TEST_CASE("K-hat(dt,dt,dt) = 1 with P = dt") {
  const auto& row = fixture_row("M1/ssnm-koszul/P-base");
  const auto& item = item_of(row, "1");
  for (int s = 0; s < 5; ++s) {
    const auto inst = draw_fixture(fixture("M1"), {"t^2", "", {}}, row, item.patterns[0], {}, s);
    const Three v = three_way(row, item, inst);
    CHECK(v.oracle == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v.printed == doctest::Approx(1.0).epsilon(1e-14));
    REQUIRE(v.covered);
    CHECK(v.general == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("R-bar(dt,V,W,dt) = -0.25 g_F(V,W) for b = t^2 at t = 0.5") {
  const auto& row = fixture_row("M1/ssm-curvature/P-base");
  const auto& item = item_of(row, "4");
  for (int s = 0; s < 5; ++s) {
    auto inst = draw_fixture(fixture("M1"), {"t^2", "", {}}, row, item.patterns[0], {}, 10 + s);
    inst.p[0] = 0.5;
    const double want = -0.25 * gF(inst, 1, 2);
    const Three v = three_way(row, item, inst);
    CHECK(std::abs(v.oracle - want) < 1e-12);
    CHECK(std::abs(v.printed - want) < 1e-12);
    CHECK(std::abs(v.general - want) < 1e-12);
  }
}

TEST_CASE("K-bar(V,dt,W) = -2 g_F(V,W) for b = t, P = dt at t = 2") {
  const auto& row = fixture_row("M1/ssm-koszul/P-base");
  const auto& item = item_of(row, "4");
  for (int s = 0; s < 5; ++s) {
    auto inst = draw_fixture(fixture("M1"), {"t", "", {}}, row, item.patterns[0], {}, 20 + s);
    inst.p[0] = 2.0;
    const double want = -2.0 * gF(inst, 0, 2);
    const Three v = three_way(row, item, inst);
    CHECK(std::abs(v.oracle - want) < 1e-12);
    CHECK(std::abs(v.printed - want) < 1e-12);
  }
}

TEST_CASE("Kasner with zero exponents is a direct product") {
  const FixtureInfo& fx = fixture("M2");
  const FixtureParams flat{"", "t", {0.0, 0.0}};
  const auto& row = fixture_row("M2/ssm-curvature/P-base");
  for (int s = 0; s < 10; ++s) {
    const auto inst = draw_fixture(fx, flat, row, row.items[0].patterns[0], {}, 30 + s);
    for (int j = 1; j <= 2; ++j) {
      const Jet2 b = inst.M.warping(j).jet(inst.p);
      CHECK(b.value == 1.0);
      CHECK(b.grad(0) == 0.0);
    }
    // mixed plain curvature vanishes: -dt^2 is flat and nothing couples it to the fibers
    const LocalGeometry lg(inst.M.metric, inst.M.cometric, ConnectionSpec::plain(), inst.p);
    const auto dt = lg.field(inst.M.lift(VectorField::coordinate(inst.M.factor(0).chart, 0), 0).field);
    const auto V = lg.field(inst.M.lift(VectorField::coordinate(inst.M.factor(2).chart, 0), 2).field);
    const auto W = lg.field(inst.M.lift(VectorField::coordinate(inst.M.factor(2).chart, 1), 2).field);
    const auto U = lg.field(inst.M.lift(VectorField::coordinate(inst.M.factor(1).chart, 0), 1).field);
    CHECK(std::abs(lg.curvature(dt, V, W, dt)) < 1e-13);
    CHECK(std::abs(lg.curvature(U, V, W, U)) < 1e-13);
  }
  // the fixture items that hold with p = 0 agree three ways
  int agree = 0;
  for (const auto& r : check_fixture("M2", flat, 0, 4, {}))
    if (!kFindings.count(r.item)) {
      INFO(r.item << " " << r.pattern);
      CHECK(r.pass());
      ++agree;
    }
  CHECK(agree > 100);
}

TEST_CASE("degenerate twisting with db != 0 skips the limit probe") {
  const LimitProbe p = degenerate_limit_probe(fixture("M4").defaults.b, 0, {"u1", "v1"}, true);
  CHECK(p.skipped);
  CHECK_FALSE(p.hypothesis);
  CHECK(p.reason.find("db does not vanish") != std::string::npos);
  const LimitProbe q = degenerate_limit_probe("t^2*(2 + u1)", 0, {"u1", "v1"}, true);
  CHECK_FALSE(q.skipped);
  CHECK(q.hypothesis);
  const LimitProbe r = degenerate_limit_probe("1 + t", 0, {"u1", "v1"}, true);
  CHECK(r.skipped);
  CHECK(r.reason.find("does not vanish at t = 0") != std::string::npos);
}

// ---------------------------------------------------------------- properties

TEST_CASE("three-way agreement on the default fixtures") {
  for (const auto& fx : fixtures()) {
    std::map<std::string, bool> failed;
    for (const auto& r : check_fixture(fx.name, fx.defaults, 0, 20, {})) {
      failed[r.item] = failed[r.item] || !r.pass();
      if (r.has_amended) {
        INFO(r.item << " amended " << r.amended << " oracle " << r.oracle);
        CHECK(r.amended_cmp.pass);
      }
      if (kFindings.count(r.item)) continue;
      INFO(r.item << " " << r.pattern << " seed " << r.seed << " oracle " << r.oracle << " printed " << r.printed
                  << " general " << r.general);
      CHECK(r.printed_cmp.pass);
      if (r.covered) CHECK(r.general_cmp.pass);
    }
    for (const auto& f : kFindings)
      if (f.rfind(fx.name + "/", 0) == 0) {
        INFO(f);
        CHECK(failed[f]);
      }
  }
}
