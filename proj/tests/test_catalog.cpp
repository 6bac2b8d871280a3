#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "koszul/catalog_check.hpp"
#include "koszul/errors.hpp"

using namespace kg;

namespace {

const catalog::Row& row_named(const std::string& id) {
  for (const auto& r : catalog::rows())
    if (r.id == id) return r;
  FAIL("no row " << id);
  throw 0;
}

const catalog::Item& item_of(const catalog::Row& r, const std::string& ordinal) {
  for (const auto& it : r.items)
    if (it.ordinal == ordinal) return it;
  FAIL("no item " << ordinal);
  throw 0;
}

// items whose printed formula disagrees with the definitions
const std::set<std::string> kFindings = {
    "ssm-koszul/warped/P-fiber (9)",     "ssm-curvature/warped/P-base (12)",
    "ssm-curvature/warped/P-fiber (10)", "ssm-curvature/warped/P-fiber (16)",
    "ap-curvature/warped (11)",          "ssm-curvature/twisted/P-base (6)",
    "ssnm-curvature/twisted/P-base (7)",
};

}  // namespace

TEST_CASE("closed_form routes keys to single items") {
  {
    const auto& row = row_named("ssm-curvature/warped/P-base");
    const auto& it = item_of(row, "4");
    const auto inst = draw_instance(row, it.patterns[0], {{'i', 2}, {'j', 2}}, 5);
    CHECK(to_string(inst.key) == "ssm/curvature/warped/P=base/B,F2,F2,B");
    const ClosedForm cf = closed_form(inst.key, inst.M, inst.args, inst.aux, inst.p);
    REQUIRE(cf.covered);
    CHECK(cf.item == "ssm-curvature/warped/P-base (4)");
    const double o = oracle_value(row, inst);
    CHECK(compare(o, cf.value, {}).pass);
  }
  {
    const auto& row = row_named("koszul/twisted");
    const auto& it = item_of(row, "4");
    const auto inst = draw_instance(row, it.patterns[0], {}, 6);
    const ClosedForm cf = closed_form(inst.key, inst.M, inst.args, inst.aux, inst.p);
    REQUIRE(cf.covered);
    CHECK(cf.item == "koszul/twisted (4)");
    CHECK(compare(oracle_value(row, inst), cf.value, {}).pass);
  }
}

TEST_CASE("other cases are covered zeros") {
  const auto& row = row_named("ssm-koszul/warped/P-base");
  const auto& it = item_of(row, "7");
  REQUIRE(it.other_cases);
  const auto inst = draw_instance(row, it.patterns[0], {{'i', 1}, {'j', 2}, {'k', 3}}, 7);
  const ClosedForm cf = closed_form(inst.key, inst.M, inst.args, inst.aux, inst.p);
  CHECK(cf.covered);
  CHECK(cf.item == "ssm-koszul/warped/P-base (7)");
  CHECK(cf.value == 0.0);
  CHECK(std::abs(oracle_value(row, inst)) < 1e-10);
}

TEST_CASE("key errors and coverage gaps") {
  const auto& row = row_named("ssm-koszul/warped/P-base");
  const auto inst = draw_instance(row, row.items[0].patterns[0], {}, 8);

  auto five = inst.key;
  five.arg_tags.push_back(kBase);
  auto args = inst.args;
  args.push_back(inst.args[0]);
  CHECK_THROWS_AS(closed_form(five, inst.M, args, inst.aux, inst.p), CaseMismatch);

  auto wrong_tag = inst.key;
  wrong_tag.arg_tags[0] = 1;
  CHECK_THROWS_AS(closed_form(wrong_tag, inst.M, inst.args, inst.aux, inst.p), CaseMismatch);

  auto no_p = inst.aux;
  no_p.P.reset();
  CHECK_THROWS_AS(closed_form(inst.key, inst.M, inst.args, no_p, inst.p), CaseMismatch);

  // base field plus a fiber field: only the definitions handle it
  auto mixed = inst.args;
  const LiftedField fib = inst.M.lift(VectorField::coordinate(inst.M.factor(1).chart, 0), 1);
  for (size_t i = 0; i < mixed[0].field.components.size(); ++i)
    mixed[0].field.components[i] = mixed[0].field.components[i] + fib.field.components[i];
  CHECK_THROWS_AS(closed_form(inst.key, inst.M, mixed, inst.aux, inst.p), CaseMismatch);

  // the catalog lists no plain Koszul table for multiply warped products
  auto plain = inst.key;
  plain.connection = ConnectionKind::Plain;
  plain.p = PLocation::none();
  const ClosedForm nc = closed_form(plain, inst.M, inst.args, {}, inst.p);
  CHECK_FALSE(nc.covered);

  auto outside = inst.p;
  outside[0] = 5.0;
  CHECK_THROWS_AS(closed_form(inst.key, inst.M, inst.args, inst.aux, outside), DomainError);
}

TEST_CASE("coverage of the dispatch families") {
  using C = ConnectionKind;
  using O = ObjectKind;
  using K = PLocation::Kind;
  const std::tuple<C, O, ProductKind, K> families[] = {
      {C::SemiSymMetric, O::KoszulForm, ProductKind::MultiplyWarped, K::Base},
      {C::SemiSymMetric, O::KoszulForm, ProductKind::MultiplyWarped, K::Fiber},
      {C::SemiSymMetric, O::Curvature, ProductKind::MultiplyWarped, K::Base},
      {C::SemiSymMetric, O::Curvature, ProductKind::MultiplyWarped, K::Fiber},
      {C::SemiSymNonMetric, O::KoszulForm, ProductKind::MultiplyWarped, K::Base},
      {C::SemiSymNonMetric, O::KoszulForm, ProductKind::MultiplyWarped, K::Fiber},
      {C::SemiSymNonMetric, O::Curvature, ProductKind::MultiplyWarped, K::Base},
      {C::SemiSymNonMetric, O::Curvature, ProductKind::MultiplyWarped, K::Fiber},
      {C::AlmostProduct, O::KoszulForm, ProductKind::MultiplyWarped, K::None},
      {C::AlmostProduct, O::Curvature, ProductKind::MultiplyWarped, K::None},
      {C::Plain, O::KoszulForm, ProductKind::Twisted, K::None},
      {C::Plain, O::Curvature, ProductKind::Twisted, K::None},
      {C::SemiSymMetric, O::KoszulForm, ProductKind::Twisted, K::Base},
      {C::SemiSymMetric, O::KoszulForm, ProductKind::Twisted, K::Fiber},
      {C::SemiSymMetric, O::Curvature, ProductKind::Twisted, K::Base},
      {C::SemiSymMetric, O::Curvature, ProductKind::Twisted, K::Fiber},
      {C::SemiSymNonMetric, O::KoszulForm, ProductKind::Twisted, K::Base},
      {C::SemiSymNonMetric, O::KoszulForm, ProductKind::Twisted, K::Fiber},
      {C::SemiSymNonMetric, O::Curvature, ProductKind::Twisted, K::Base},
      {C::SemiSymNonMetric, O::Curvature, ProductKind::Twisted, K::Fiber},
      {C::AlmostProduct, O::KoszulForm, ProductKind::Twisted, K::None},
      {C::AlmostProduct, O::Curvature, ProductKind::Twisted, K::None},
  };
  for (const auto& [c, o, pk, loc] : families) {
    const auto* r = catalog::find_row(c, o, pk, loc);
    REQUIRE(r != nullptr);
    CHECK(!r->items.empty());
  }
  CHECK(catalog::item_count() >= 200);
}

TEST_CASE("dispatch prefers listed items over other cases") {
  const auto& row = row_named("ssm-curvature/warped/P-fiber");
  // (U_k, V_i, W_j, Q_s) with all indices equal to l is listed explicitly
  auto m = catalog::dispatch(row, {1, 1, 1, 1}, 1);
  REQUIRE(m);
  CHECK_FALSE(m->item->other_cases);
  auto none = catalog::dispatch(row, {1, 2, 3, 1, 2}, 1);
  CHECK_FALSE(none);
}

// ---------------------------------------------------------------- properties

TEST_CASE("catalog agrees with the definitions") {
  const Tolerance tol;
  int checked = 0;
  for (const auto& row : catalog::rows())
    for (const auto& it : row.items) {
      const std::string label = row.label(it);
      if (kFindings.count(label)) continue;
      for (const auto& r : check_item(row, it, 3, 4, tol)) {
        INFO(label << " " << r.pattern << " seed " << r.seed << " oracle " << r.oracle << " catalog " << r.catalog);
        CHECK(r.cmp.pass);
        ++checked;
      }
    }
  CHECK(checked > 800);
}

TEST_CASE("printed items that disagree with the definitions") {
  const Tolerance tol;
  for (const auto& row : catalog::rows())
    for (const auto& it : row.items) {
      const std::string label = row.label(it);
      if (!kFindings.count(label)) continue;
      const auto recs = check_item(row, it, 0, 20, tol);
      INFO(label);
      CHECK(std::any_of(recs.begin(), recs.end(), [](const CheckRecord& r) { return !r.cmp.pass; }));
      if (it.amended)
        for (const auto& r : recs) CHECK(r.amended_cmp.pass);
    }
}

TEST_CASE("closed_form is linear over functions in fiber slots") {
  // K(X, V, f W) = f K(X, V, W) on twisted products (tensorial third slot)
  const auto& row = row_named("koszul/twisted");
  const auto& it = item_of(row, "3");
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = draw_instance(row, it.patterns[0], {}, 100 + trial);
    const ClosedForm a = closed_form(inst.key, inst.M, inst.args, inst.aux, inst.p);
    const auto& F = *inst.M.factor(1).chart;
    const std::string f = "1 + " + F.coords()[0] + "^2";
    const ScalarField on_M = ScalarField::parse(inst.M.chart, f), on_F = ScalarField::parse(inst.M.factor(1).chart, f);
    auto scaled = inst.args;
    for (auto& c : scaled[2].field.components) c = on_M.expr * c;
    for (auto& c : scaled[2].local.components) c = on_F.expr * c;
    const ClosedForm b = closed_form(inst.key, inst.M, scaled, inst.aux, inst.p);
    CHECK(b.value == doctest::Approx(on_M(inst.p) * a.value).epsilon(1e-12));
  }
}
