#include "koszul/products.hpp"

#include <set>

#include "koszul/errors.hpp"

namespace kg {

const char* to_string(ProductKind k) {
  return k == ProductKind::MultiplyWarped ? "warped" : "twisted";
}

namespace {

// Variable map from `from` into the product chart, by coordinate name.
// Unmatched names map to -1.
std::vector<int> name_map(const Chart& from, const Chart& to) {
  std::vector<int> m(from.dim());
  for (int i = 0; i < from.dim(); ++i) m[i] = to.index_of(from.coords()[i]);
  return m;
}

std::vector<int> block_map(int dim, int begin) {
  std::vector<int> m(dim);
  for (int i = 0; i < dim; ++i) m[i] = begin + i;
  return m;
}

Expr remap_checked(const Expr& e, const Chart& from, const std::vector<int>& map,
                   const std::string& what) {
  std::set<int> vars;
  e.collect_vars(vars);
  for (int v : vars)
    if (v >= static_cast<int>(map.size()) || map[v] < 0)
      throw SpecMismatch(what + " depends on coordinate '" + from.coords()[v] +
                         "' outside its allowed block");
  return remap(e, map);
}

struct Assembly {
  ProductManifold M;
  std::vector<std::vector<Expr>> g;
  std::vector<std::vector<Expr>> unscaled;
};

Assembly assemble(const FactorData& base, const std::vector<FactorData>& fibers) {
  Assembly a;
  std::vector<std::string> coords;
  std::vector<Interval> domain;
  std::string name = base.chart->name();
  auto add = [&](const FactorData& f) {
    if (!f.chart || f.metric.chart() == nullptr) throw SpecMismatch("factor without chart or metric");
    require_same_chart(*f.chart, *f.metric.chart());
    for (int i = 0; i < f.chart->dim(); ++i) {
      coords.push_back(f.chart->coords()[i]);
      domain.push_back(f.chart->domain()[i]);
    }
  };
  add(base);
  for (const auto& f : fibers) {
    add(f);
    name += " x " + f.chart->name();
  }
  std::set<std::string> seen(coords.begin(), coords.end());
  if (seen.size() != coords.size())
    throw SpecMismatch("coordinate names must be distinct across factors");

  auto& M = a.M;
  M.chart = make_chart(name, coords, domain);
  const int n = M.chart->dim();
  a.g.assign(n, std::vector<Expr>(n, Expr(0.0)));
  a.unscaled = a.g;
  int begin = 0;
  auto place = [&](const FactorData& f) {
    const int d = f.chart->dim();
    M.factors.push_back({f.chart, f.metric, begin, begin + d});
    for (int i = 0; i < d; ++i) M.factor_map.push_back(static_cast<int>(M.factors.size()) - 1);
    const auto map = block_map(d, begin);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a.unscaled[begin + i][begin + j] = remap(f.metric.entry(i, j), map);
    begin += d;
  };
  place(base);
  for (const auto& f : fibers) place(f);
  return a;
}

void finish(Assembly& a) {
  auto& M = a.M;
  const int n = M.chart->dim();
  a.g = a.unscaled;
  for (int j = 1; j <= M.fiber_count(); ++j) {
    const auto& F = M.factors[j];
    const Expr& b = M.warpings[j - 1].expr;
    for (int r = F.begin; r < F.end; ++r)
      for (int c = F.begin; c < F.end; ++c)
        if (!a.unscaled[r][c].is_zero()) a.g[r][c] = b * b * a.unscaled[r][c];
  }
  M.metric = MetricField(M.chart, a.g);
  const MetricField unscaled(M.chart, a.unscaled);
  M.cometric.blocks.clear();
  for (int f = 0; f < static_cast<int>(M.factors.size()); ++f) {
    ProductBlock::Block blk;
    blk.begin = M.factors[f].begin;
    blk.end = M.factors[f].end;
    blk.factor_metric = unscaled;
    if (f > 0) blk.warping = M.warpings[f - 1];
    M.cometric.blocks.push_back(std::move(blk));
  }
}

}  // namespace

const Factor& ProductManifold::factor(FactorTag tag) const {
  if (tag < 0 || tag >= static_cast<int>(factors.size()))
    throw UnknownFactor("factor " + std::to_string(tag) + " does not exist");
  return factors[tag];
}

const ScalarField& ProductManifold::warping(int j) const {
  if (j < 1 || j > fiber_count()) throw UnknownFactor("no fiber " + std::to_string(j));
  return warpings[j - 1];
}

Point ProductManifold::project(const Point& p, FactorTag tag) const {
  const Factor& f = factor(tag);
  return Point(p.begin() + f.begin, p.begin() + f.end);
}

Expr ProductManifold::embed(const Expr& e, FactorTag tag) const {
  const Factor& f = factor(tag);
  return remap(e, block_map(f.dim(), f.begin));
}

LiftedField ProductManifold::lift(const VectorField& v, FactorTag tag) const {
  const Factor& f = factor(tag);
  LiftedField out;
  out.tag = tag;
  if (v.chart->same_coords(*f.chart)) {
    out.local = v;
    out.field = VectorField::zero(chart);
    for (int i = 0; i < f.dim(); ++i) out.field.components[f.begin + i] = embed(v.components[i], tag);
    return out;
  }
  if (!v.chart->same_coords(*chart))
    throw ChartMismatch("field chart '" + v.chart->name() + "' is neither the factor nor the product chart");
  std::vector<int> inv(chart->dim(), -1);
  for (int i = f.begin; i < f.end; ++i) inv[i] = i - f.begin;
  out.field = v;
  out.field.chart = chart;
  out.local = VectorField::zero(f.chart);
  for (int i = 0; i < chart->dim(); ++i) {
    const Expr& c = v.components[i];
    if (i < f.begin || i >= f.end) {
      if (!c.is_zero())
        throw SpecMismatch("component '" + chart->coords()[i] + "' lies outside the tagged factor");
      continue;
    }
    out.local.components[i - f.begin] = remap_checked(c, *chart, inv, "lifted component");
  }
  return out;
}

ProductStructure ProductManifold::lift_structure(const std::vector<ProductStructure>& per_factor) const {
  if (per_factor.size() != factors.size())
    throw SpecMismatch("need one product structure per factor");
  const int n = chart->dim();
  ProductStructure J{chart, std::vector<std::vector<Expr>>(n, std::vector<Expr>(n, Expr(0.0)))};
  for (int t = 0; t < static_cast<int>(factors.size()); ++t) {
    const Factor& f = factors[t];
    require_same_chart(*f.chart, *per_factor[t].chart);
    for (int i = 0; i < f.dim(); ++i)
      for (int j = 0; j < f.dim(); ++j)
        J.matrix[f.begin + i][f.begin + j] = embed(per_factor[t].matrix[i][j], t);
  }
  return J;
}

ProductManifold build_multiply_warped(const MultiplyWarpedSpec& spec) {
  if (spec.warpings.size() != spec.fibers.size())
    throw SpecMismatch("need exactly one warping per fiber");
  Assembly a = assemble(spec.base, spec.fibers);
  a.M.kind = ProductKind::MultiplyWarped;
  std::vector<int> allowed(a.M.chart->dim(), -1);
  for (int i = 0; i < spec.base.chart->dim(); ++i) allowed[i] = i;
  for (const auto& w : spec.warpings) {
    auto map = name_map(*w.chart, *a.M.chart);
    for (auto& m : map)
      if (m >= 0 && allowed[m] < 0) m = -1;
    a.M.warpings.push_back({a.M.chart, remap_checked(w.expr, *w.chart, map, "warping")});
  }
  finish(a);
  return std::move(a.M);
}

ProductManifold build_twisted(const TwistedSpec& spec) {
  Assembly a = assemble(spec.base, {spec.fiber});
  a.M.kind = ProductKind::Twisted;
  const auto map = name_map(*spec.twisting.chart, *a.M.chart);
  a.M.warpings.push_back(
      {a.M.chart, remap_checked(spec.twisting.expr, *spec.twisting.chart, map, "twisting")});
  finish(a);
  return std::move(a.M);
}

namespace {

void require_tag(const LiftedField& X, FactorTag tag) {
  if (X.tag != tag) throw SpecMismatch("argument is not a lift from the requested factor");
}

}  // namespace

double factor_koszul(const ProductManifold& M, FactorTag tag, const LiftedField& X,
                     const LiftedField& Y, const LiftedField& Z, const Point& p,
                     const ConnectionSpec& spec) {
  const Factor& f = M.factor(tag);
  for (const auto* a : {&X, &Y, &Z}) require_tag(*a, tag);
  const LocalGeometry lg(f.metric, ExactInverse{}, spec, M.project(p, tag));
  return lg.koszul(lg.field(X.local), lg.field(Y.local), lg.field(Z.local));
}

double factor_riemann(const ProductManifold& M, FactorTag tag, const LiftedField& X,
                      const LiftedField& Y, const LiftedField& Z, const LiftedField& T,
                      const Point& p, const ConnectionSpec& spec) {
  const Factor& f = M.factor(tag);
  for (const auto* a : {&X, &Y, &Z, &T}) require_tag(*a, tag);
  const LocalGeometry lg(f.metric, ExactInverse{}, spec, M.project(p, tag));
  return lg.curvature(lg.field(X.local), lg.field(Y.local), lg.field(Z.local), lg.field(T.local));
}

}  // namespace kg
