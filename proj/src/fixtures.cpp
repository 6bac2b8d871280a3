#include "koszul/fixtures.hpp"

#include <cmath>
#include <cstdio>

#include "koszul/errors.hpp"
#include "koszul/generators.hpp"

namespace kg {

namespace {

using catalog::Binding;
using catalog::Pattern;
using catalog::Row;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fiber_coord(int f, int a) {
  static const char* names[] = {"u", "v", "w", "z"};
  return names[a] + std::to_string(f);
}

ChartPtr fiber_chart(int f, int dim) {
  std::vector<std::string> c;
  for (int a = 0; a < dim; ++a) c.push_back(fiber_coord(f, a));
  return make_chart("F" + std::to_string(f), c, std::vector<Interval>(dim, Interval{-1.0, 1.0}));
}

FactorTag tag_of(const catalog::Slot& s, const Binding& bind) {
  if (s.base()) return kBase;
  if (!s.index) return 1;
  return bind.at(s.index);
}

}  // namespace

const std::vector<FixtureInfo>& fixtures() {
  static const std::vector<FixtureInfo> all = {
      {"M1", "warped product I x_b F, g = -dt^2 + b^2 g_F, dim F = 3",
       ProductKind::MultiplyWarped, {3}, {0.0, 4.0}, {0.3, 1.5}, {"t^2", "", {}}},
      {"M2", "generalized Kasner I x_{phi^p1} F1 x_{phi^p2} F2, dim F1 = 1, dim F2 = 2",
       ProductKind::MultiplyWarped, {1, 2}, {0.0, 4.0}, {0.3, 1.5}, {"", "t", {0.4, -0.6}}},
      {"M3", "generalized Kasner with three one-dimensional fibers",
       ProductKind::MultiplyWarped, {1, 1, 1}, {0.0, 4.0}, {0.3, 1.5}, {"", "t", {0.5, -0.3, 0.8}}},
      {"M4", "twisted product (0,1) x_b F, g = -dt^2 + b^2 g_F, b = b(t, fiber), dim F = 2",
       ProductKind::Twisted, {2}, {0.0, 1.0}, {0.2, 0.9}, {"t*(1 + u1^2/4 + v1/5)", "", {}}},
  };
  return all;
}

const FixtureInfo& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw UnknownFixture("no fixture named '" + name + "' (expected M1, M2, M3 or M4)");
}

std::vector<std::string> fixture_warpings(const FixtureInfo& fx, const FixtureParams& params) {
  const int m = static_cast<int>(fx.fiber_dims.size());
  if (fx.name == "M1" || fx.name == "M4") {
    if (params.b.empty()) throw SpecError(fx.name + " needs a warping b");
    return {params.b};
  }
  if (params.phi.empty()) throw SpecError(fx.name + " needs phi");
  if (static_cast<int>(params.p.size()) != m)
    throw SpecError(fx.name + " needs " + std::to_string(m) + " exponents, got " +
                    std::to_string(params.p.size()));
  std::vector<std::string> out;
  for (double pj : params.p) out.push_back("(" + params.phi + ")^(" + num(pj) + ")");
  return out;
}

std::vector<const Row*> fixture_rows_of(const std::string& name) {
  fixture(name);
  std::vector<const Row*> out;
  for (const auto& r : catalog::fixture_rows())
    if (r.fixture == name) out.push_back(&r);
  return out;
}

ChartPtr fixture_base_chart(const FixtureInfo& fx) { return make_chart("I", {"t"}, {fx.t_range}); }

ProductManifold build_fixture(const FixtureInfo& fx, const FixtureParams& params, const ChartPtr& base,
                              const std::vector<FactorData>& fibers) {
  const auto warp = fixture_warpings(fx, params);
  if (fibers.size() != fx.fiber_dims.size())
    throw SpecError(fx.name + " takes " + std::to_string(fx.fiber_dims.size()) + " fibers");
  for (size_t f = 0; f < fibers.size(); ++f)
    if (fibers[f].chart->dim() != fx.fiber_dims[f])
      throw SpecError(fx.name + ": fiber " + std::to_string(f + 1) + " must have dimension " +
                      std::to_string(fx.fiber_dims[f]));
  const FactorData bd{base, MetricField::diagonal(base, {Expr(-1.0)})};
  if (fx.product == ProductKind::MultiplyWarped) {
    MultiplyWarpedSpec spec;
    spec.base = bd;
    for (size_t f = 0; f < fibers.size(); ++f) {
      spec.fibers.push_back(fibers[f]);
      spec.warpings.push_back(ScalarField::parse(base, warp[f]));
    }
    return build_multiply_warped(spec);
  }
  std::vector<std::string> coords{"t"};
  std::vector<Interval> dom{fx.t_range};
  const auto& fc = *fibers[0].chart;
  for (int a = 0; a < fc.dim(); ++a) {
    coords.push_back(fc.coords()[a]);
    dom.push_back(fc.domain().empty() ? Interval{-INFINITY, INFINITY} : fc.domain()[a]);
  }
  auto all = make_chart("IxF", coords, dom);
  return build_twisted({bd, fibers[0], ScalarField::parse(all, warp[0])});
}

CatalogInstance draw_fixture(const FixtureInfo& fx, const FixtureParams& params, const Row& row,
                             const Pattern& pat, const Binding& bind, std::uint64_t seed) {
  Rng rng(seed);
  const int m = static_cast<int>(fx.fiber_dims.size());
  const bool ap = row.connection == ConnectionKind::AlmostProduct;
  auto base = fixture_base_chart(fx);
  std::vector<ChartPtr> charts{base};
  std::vector<FactorData> data{{base, MetricField::diagonal(base, {Expr(-1.0)})}};
  std::vector<ProductStructure> Js{ProductStructure::constant(base, {{rng.coin() ? 1.0 : -1.0}})};
  for (int f = 1; f <= m; ++f) {
    charts.push_back(fiber_chart(f, fx.fiber_dims[f - 1]));
    if (ap) {
      auto s = random_structured_metric(rng, charts[f]);
      data.push_back({charts[f], s.g});
      Js.push_back(s.J);
    } else {
      data.push_back({charts[f], random_metric(rng, charts[f])});
    }
  }

  CatalogInstance inst;
  inst.M = build_fixture(fx, params, base, {data.begin() + 1, data.end()});

  for (int attempt = 0;; ++attempt) {
    if (attempt > 100) throw SingularMetric(fx.name + ": no sample point with b away from zero");
    Point p{rng.uniform(fx.t_sample.lo, fx.t_sample.hi)};
    for (int f = 1; f <= m; ++f) {
      const Point q = random_regular_point(rng, data[f].metric, 1e-2);
      p.insert(p.end(), q.begin(), q.end());
    }
    bool ok = true;
    for (int j = 1; j <= m; ++j) {
      const double bj = inst.M.warping(j)(p);
      if (!std::isfinite(bj) || std::abs(bj) < 1e-3) ok = false;
    }
    if (ok) {
      inst.p = std::move(p);
      break;
    }
  }

  const auto dt = VectorField::coordinate(base, 0);
  inst.key.connection = row.connection;
  inst.key.object = row.object;
  inst.key.product = row.product;
  for (const auto& s : pat.slots) {
    const FactorTag t = tag_of(s, bind);
    inst.key.arg_tags.push_back(t);
    inst.args.push_back(inst.M.lift(t == kBase ? dt : random_vector_field(rng, charts[t]), t));
  }
  if (row.ploc == PLocation::Kind::Base) {
    inst.key.p = PLocation::base();
    inst.aux.P = inst.M.lift(dt, kBase);
  } else if (row.ploc == PLocation::Kind::Fiber) {
    const int l = bind.count('l') ? bind.at('l') : 1;
    inst.key.p = PLocation::in_fiber(l);
    inst.aux.P = inst.M.lift(random_vector_field(rng, charts[l]), l);
  }
  if (ap) inst.aux.J = Js;
  return inst;
}

std::vector<FixtureRecord> check_fixture(const std::string& name, const FixtureParams& params,
                                         std::uint64_t seed, int n, const Tolerance& tol) {
  const FixtureInfo& fx = fixture(name);
  const int m = static_cast<int>(fx.fiber_dims.size());
  std::vector<FixtureRecord> out;
  for (const Row* row : fixture_rows_of(name))
    for (const auto& item : row->items) {
      const auto cases = item_cases(*row, item, m);
      if (cases.empty()) continue;
      const int count = std::max<int>(n, static_cast<int>(cases.size()));
      const std::uint64_t label = label_hash(row->label(item));
      for (int t = 0; t < count; ++t) {
        const auto& [pi, bind] = cases[t % cases.size()];
        const Pattern& pat = item.patterns[pi];
        FixtureRecord r;
        r.fixture = name;
        r.seed = mix_seed(seed, label, static_cast<std::uint64_t>(t));
        const CatalogInstance inst = draw_fixture(fx, params, *row, pat, bind, r.seed);
        r.item = row->label(item);
        r.pattern = pat.text;
        r.key = to_string(inst.key);
        r.oracle = oracle_value(*row, inst);
        r.printed = catalog::evaluate(*row, item, pi, bind, inst.M, inst.args, inst.aux, inst.p);
        r.printed_cmp = compare(r.oracle, r.printed, tol);
        const ClosedForm cf = closed_form(inst.key, inst.M, inst.args, inst.aux, inst.p);
        r.covered = cf.covered;
        if (cf.covered) {
          r.general = cf.value;
          r.general_item = cf.item;
          r.general_cmp = compare(r.oracle, r.general, tol);
        }
        if (item.amended) {
          r.has_amended = true;
          r.amended = catalog::evaluate(*row, item, pi, bind, inst.M, inst.args, inst.aux, inst.p, true);
          r.amended_cmp = compare(r.oracle, r.amended, tol);
        }
        out.push_back(std::move(r));
      }
    }
  return out;
}

}  // namespace kg
