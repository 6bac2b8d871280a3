#include "koszul/catalog_check.hpp"

#include <cmath>
#include <set>

#include "koszul/errors.hpp"
#include "koszul/generators.hpp"

namespace kg {

Comparison compare(double reference, double value, const Tolerance& tol) {
  Comparison c;
  c.abs_err = std::abs(value - reference);
  c.rel_err = reference != 0.0 ? c.abs_err / std::abs(reference) : (c.abs_err == 0.0 ? 0.0 : INFINITY);
  c.pass = c.abs_err <= tol.abs || c.rel_err <= tol.rel;
  return c;
}

std::uint64_t label_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

using catalog::Binding;
using catalog::Pattern;
using catalog::Row;

ChartPtr factor_chart(const std::string& name, const std::vector<std::string>& coords) {
  return make_chart(name, coords, std::vector<Interval>(coords.size(), Interval{-1.0, 1.0}));
}

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// b = c + small polynomial, kept away from zero at the sample point
Expr draw_warping(Rng& rng, const std::vector<int>& vars) {
  return Expr(rng.uniform(2.0, 3.0)) + random_polynomial(rng, vars, 2, -0.3, 0.3);
}

FactorTag tag_of(const catalog::Slot& s, const Binding& bind) {
  if (s.base()) return kBase;
  if (!s.index) return 1;
  return bind.at(s.index);
}

}  // namespace

CatalogInstance draw_instance(const Row& row, const Pattern& pat, const Binding& bind,
                              std::uint64_t seed) {
  Rng rng(seed);
  const bool warped = row.product == ProductKind::MultiplyWarped;
  const int m = warped ? kCheckFibers : 1;
  const bool ap = row.connection == ConnectionKind::AlmostProduct;

  std::vector<ChartPtr> charts;
  charts.push_back(factor_chart("B", {"x", "y"}));
  for (int f = 1; f <= m; ++f)
    charts.push_back(factor_chart("F" + std::to_string(f),
                                  {"u" + std::to_string(f), "v" + std::to_string(f)}));
  std::vector<FactorData> data;
  std::vector<ProductStructure> Js;
  for (const auto& c : charts) {
    if (ap) {
      auto s = random_structured_metric(rng, c);
      data.push_back({c, s.g});
      Js.push_back(s.J);
    } else {
      data.push_back({c, random_metric(rng, c)});
    }
  }

  std::vector<Point> local;
  for (const auto& d : data) local.push_back(random_regular_point(rng, d.metric, 1e-2));

  CatalogInstance inst;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100) throw SingularMetric("could not draw a warping away from zero");
    Point p;
    for (const auto& q : local) p.insert(p.end(), q.begin(), q.end());
    bool ok = true;
    if (warped) {
      MultiplyWarpedSpec spec;
      spec.base = data[0];
      for (int f = 1; f <= m; ++f) spec.fibers.push_back(data[f]);
      for (int f = 1; f <= m; ++f) spec.warpings.push_back({charts[0], draw_warping(rng, iota(2))});
      inst.M = build_multiply_warped(spec);
    } else {
      auto all = factor_chart("BxF", {"x", "y", "u1", "v1"});
      inst.M = build_twisted({data[0], data[1], {all, draw_warping(rng, iota(4))}});
    }
    for (int j = 1; j <= m; ++j)
      if (std::abs(inst.M.warping(j)(p)) < 0.5) ok = false;
    if (ok) {
      inst.p = std::move(p);
      break;
    }
  }

  inst.key.connection = row.connection;
  inst.key.object = row.object;
  inst.key.product = row.product;
  for (const auto& s : pat.slots) {
    const FactorTag t = tag_of(s, bind);
    inst.key.arg_tags.push_back(t);
    inst.args.push_back(inst.M.lift(random_vector_field(rng, charts[t]), t));
  }
  if (row.ploc == PLocation::Kind::Base) {
    inst.key.p = PLocation::base();
    inst.aux.P = inst.M.lift(random_vector_field(rng, charts[0]), kBase);
  } else if (row.ploc == PLocation::Kind::Fiber) {
    const int l = bind.count('l') ? bind.at('l') : 1;
    inst.key.p = PLocation::in_fiber(l);
    inst.aux.P = inst.M.lift(random_vector_field(rng, charts[l]), l);
  }
  if (ap) inst.aux.J = Js;
  return inst;
}

double oracle_value(const Row& row, const CatalogInstance& inst) {
  ConnectionSpec spec;
  switch (row.connection) {
    case ConnectionKind::Plain: break;
    case ConnectionKind::SemiSymMetric: spec = ConnectionSpec::ssm(inst.aux.P->field); break;
    case ConnectionKind::SemiSymNonMetric: spec = ConnectionSpec::ssnm(inst.aux.P->field); break;
    case ConnectionKind::AlmostProduct: spec = ConnectionSpec::ap(inst.M.lift_structure(inst.aux.J)); break;
  }
  const LocalGeometry lg(inst.M.metric, inst.M.cometric, spec, inst.p);
  std::vector<JetVec> a;
  for (const auto& x : inst.args) a.push_back(lg.field(x.field));
  switch (row.object) {
    case ObjectKind::KoszulForm: return lg.koszul(a[0], a[1], a[2]);
    case ObjectKind::Curvature: return lg.curvature(a[0], a[1], a[2], a[3]);
    case ObjectKind::Contraction: return lg.gstar(lg.flat(a[0], a[1]), lg.flat(a[2], a[3]));
  }
  return 0.0;
}

std::vector<std::pair<int, Binding>> item_cases(const Row& row, const catalog::Item& item,
                                                int fibers) {
  const int m = fibers > 0 ? fibers : row.product == ProductKind::MultiplyWarped ? kCheckFibers : 1;
  const bool with_l = row.ploc == PLocation::Kind::Fiber;
  std::vector<std::pair<int, Binding>> out;
  for (int pi = 0; pi < static_cast<int>(item.patterns.size()); ++pi) {
    const Pattern& pat = item.patterns[pi];
    std::vector<char> letters;
    for (const auto& s : pat.slots)
      if (s.index && std::find(letters.begin(), letters.end(), s.index) == letters.end())
        letters.push_back(s.index);
    if (with_l) letters.push_back('l');
    std::vector<int> v(letters.size(), 1);
    while (true) {
      Binding bind;
      for (size_t a = 0; a < letters.size(); ++a) bind[letters[a]] = v[a];
      bool take;
      if (item.other_cases) {
        std::vector<FactorTag> tags;
        for (const auto& s : pat.slots) tags.push_back(tag_of(s, bind));
        auto m2 = catalog::dispatch(row, tags, with_l ? bind['l'] : 0);
        take = m2 && m2->item == &item;
        // keep the binding in the form this pattern would produce
      } else {
        take = catalog::condition_holds(item.condition, bind);
      }
      if (take) out.emplace_back(pi, bind);
      size_t a = 0;
      while (a < v.size() && ++v[a] > m) v[a++] = 1;
      if (a == v.size()) break;
    }
  }
  return out;
}

std::vector<CheckRecord> check_item(const Row& row, const catalog::Item& item, std::uint64_t seed,
                                    int n, const Tolerance& tol) {
  const auto cases = item_cases(row, item);
  std::vector<CheckRecord> out;
  if (cases.empty()) return out;
  const int count = std::max<int>(n, static_cast<int>(cases.size()));
  const std::uint64_t label = label_hash(row.label(item));
  for (int t = 0; t < count; ++t) {
    const auto& [pi, bind] = cases[t % cases.size()];
    const Pattern& pat = item.patterns[pi];
    CheckRecord r;
    r.seed = mix_seed(seed, label, static_cast<std::uint64_t>(t));
    const CatalogInstance inst = draw_instance(row, pat, bind, r.seed);
    r.key = to_string(inst.key);
    r.item = row.label(item);
    r.pattern = pat.text;
    r.oracle = oracle_value(row, inst);
    r.catalog = catalog::evaluate(row, item, pi, bind, inst.M, inst.args, inst.aux, inst.p);
    r.cmp = compare(r.oracle, r.catalog, tol);
    if (item.amended) {
      r.has_amended = true;
      r.amended = catalog::evaluate(row, item, pi, bind, inst.M, inst.args, inst.aux, inst.p, true);
      r.amended_cmp = compare(r.oracle, r.amended, tol);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckRecord> check_catalog(std::uint64_t seed, int n, const Tolerance& tol) {
  std::vector<CheckRecord> out;
  for (const auto& row : catalog::rows())
    for (const auto& it : row.items) {
      auto r = check_item(row, it, seed, n, tol);
      out.insert(out.end(), r.begin(), r.end());
    }
  return out;
}

}  // namespace kg
