#include "koszul/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "koszul/curvature.hpp"
#include "koszul/errors.hpp"
#include "koszul/generators.hpp"
#include "koszul/oracle.hpp"

namespace kg {

namespace {

using Clock = std::chrono::steady_clock;

// b = 1e-2 ... 1e-14 along the probe
constexpr int kLimitSteps = 14;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ChartPtr cube_chart(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return make_chart("C", names, std::vector<Interval>(n, {-1.0, 1.0}));
}

std::vector<int> all_vars(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

VectorField times(const Expr& f, const VectorField& X) {
  VectorField r = X;
  for (auto& c : r.components) c = f * c;
  return r;
}

double directional(const VectorField& X, const Expr& f, const Point& p) {
  const Jet2 j = eval_jet2(f, p);
  const auto x = X.values(p);
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * j.grad(static_cast<int>(i));
  return s;
}

Expr pair_expr(const MetricField& g, const VectorField& X, const VectorField& Y) {
  Expr s(0.0);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) s = s + g.entry(i, j) * X.components[i] * Y.components[j];
  return s;
}

Comparison absolute(double reference, double value, double tol) {
  Comparison c;
  c.abs_err = std::abs(value - reference);
  c.rel_err = reference != 0.0 ? c.abs_err / std::abs(reference) : (c.abs_err == 0.0 ? 0.0 : INFINITY);
  c.pass = c.abs_err < tol;
  return c;
}

CaseRecord identity_record(const std::string& suite, const std::string& check, const std::string& key,
                           std::uint64_t seed, double reference, double value, double tol) {
  CaseRecord r;
  r.suite = suite;
  r.check = check;
  r.key = key;
  r.seed = seed;
  r.reference = reference;
  r.value = value;
  r.cmp = absolute(reference, value, tol);
  return r;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const catalog::Row& fixture_row(const std::string& id) {
  for (const auto& r : catalog::fixture_rows())
    if (r.id == id) return r;
  throw std::logic_error("missing fixture row " + id);
}

const catalog::Item& item_of(const catalog::Row& row, const std::string& ordinal) {
  for (const auto& it : row.items)
    if (it.ordinal == ordinal) return it;
  throw std::logic_error("missing item " + ordinal + " in " + row.id);
}

FixtureParams params_for(const VerifyOptions& opts, const FixtureInfo& fx) {
  for (const auto& [name, p] : opts.fixture_params)
    if (name == fx.name) return p;
  return fx.defaults;
}

}  // namespace

bool LimitProbe::converges() const {
  if (skipped || series.empty()) return false;
  return std::all_of(series.begin(), series.end(), [](const Series& s) { return s.converges; });
}

bool VerifyReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteSummary& s) { return s.pass; });
}

const SuiteSummary* VerifyReport::suite(const std::string& name) const {
  for (const auto& s : suites)
    if (s.name == name) return &s;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "curvature",  "christoffel",
                                                 "catalog",    "contraction", "fixtures",
                                                 "degenerate-limit"};
  return names;
}

// ------------------------------------------------------------ identities

std::vector<CaseRecord> identity_suite(const VerifyOptions& opts, std::vector<std::string>* notes) {
  std::vector<CaseRecord> out;
  const std::string S = "identities";
  const double tol = 1e-9;
  const std::uint64_t label = label_hash(S);
  for (int trial = 0; trial < opts.identity_n; ++trial) {
    const std::uint64_t seed = mix_seed(opts.seed, label, static_cast<std::uint64_t>(trial));
    Rng rng(seed);
    const int n = 2 + trial % 3;
    auto c = cube_chart(n);
    const StructuredMetric sm = random_structured_metric(rng, c);
    const MetricField& g = sm.g;
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c),
         Z = random_vector_field(rng, c), P = random_vector_field(rng, c);
    const Expr f = random_polynomial(rng, all_vars(n));
    const Point p = random_regular_point(rng, g);
    const std::string key = "dim=" + std::to_string(n);

    const double xg = directional(X, pair_expr(g, Y, Z), p);
    const double gYP = metric_eval(g, Y, P, p), gXZ = metric_eval(g, X, Z, p),
                 gXY = metric_eval(g, X, Y, p), gXP = metric_eval(g, X, P, p),
                 gYZ = metric_eval(g, Y, Z, p), gZP = metric_eval(g, Z, P, p);
    const double gZxy = metric_eval(g, Z, lie_bracket(X, Y), p);
    const double k = koszul(g, X, Y, Z, p);
    const double fp = eval_value(f, p);
    auto add = [&](const char* name, double ref, double val) {
      out.push_back(identity_record(S, name, key, seed, ref, val, tol));
    };
    add("koszul metric compatibility", xg, k + koszul(g, X, Z, Y, p));
    add("koszul torsion", gZxy, k - koszul(g, Y, X, Z, p));
    add("ssm metric compatibility", xg, ssm_koszul(g, P, X, Y, Z, p) + ssm_koszul(g, P, X, Z, Y, p));
    add("ssm torsion", gZxy + gYP * gXZ - gXP * gYZ,
        ssm_koszul(g, P, X, Y, Z, p) - ssm_koszul(g, P, Y, X, Z, p));
    add("ssnm non-metricity", xg + gYP * gXZ + gZP * gXY,
        ssnm_koszul(g, P, X, Y, Z, p) + ssnm_koszul(g, P, X, Z, Y, p));
    add("ap J-invariance", ap_koszul(g, sm.J, X, sm.J.apply(Y), sm.J.apply(Z), p),
        ap_koszul(g, sm.J, X, Y, Z, p));
    add("first-slot function linearity", fp * k, koszul(g, times(f, X), Y, Z, p));
    add("second-slot Leibniz rule", fp * k + directional(X, f, p) * gYZ,
        koszul(g, X, times(f, Y), Z, p));
  }
  if (notes) notes->push_back("absolute tolerance 1e-9; dimensions 2-4");
  return out;
}

// ------------------------------------------------------------ curvature

std::vector<CaseRecord> curvature_suite(const VerifyOptions& opts, std::vector<std::string>* notes) {
  std::vector<CaseRecord> out;
  const std::string S = "curvature";
  const double tol = 1e-8, exact = 1e-12;
  const std::uint64_t label = label_hash(S);
  double literal = 0.0;  // |R-bar(X,Y,Z,T) + R-bar(Y,X,T,Z)|, recorded only
  for (int trial = 0; trial < opts.curvature_n; ++trial) {
    const std::uint64_t seed = mix_seed(opts.seed, label, static_cast<std::uint64_t>(trial));
    Rng rng(seed);
    const int n = 2 + trial % 3;
    auto c = cube_chart(n);
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
    const std::string key = "dim=" + std::to_string(n);
    auto add = [&](const char* name, double ref, double val, double eps) {
      out.push_back(identity_record(S, name, key, seed, ref, val, eps));
    };
    const std::pair<const char*, const LocalGeometry*> kinds[] = {
        {"R first-pair antisymmetry", &plain},
        {"R-bar first-pair antisymmetry", &ssm},
        {"R-hat first-pair antisymmetry", &ssnm},
        {"R-tilde first-pair antisymmetry", &ap}};
    for (const auto& [name, lg] : kinds) add(name, -lg->curvature(y, x, z, t), lg->curvature(x, y, z, t), tol);
    add("R last-pair antisymmetry", -plain.curvature(x, y, t, z), plain.curvature(x, y, z, t), tol);
    add("R-tilde last-pair antisymmetry", -ap.curvature(x, y, t, z), ap.curvature(x, y, z, t), tol);
    add("R-bar last-pair antisymmetry", -ssm.curvature(x, y, t, z), ssm.curvature(x, y, z, t), tol);
    literal = std::max(literal, std::abs(ssm.curvature(x, y, z, t) + ssm.curvature(y, x, t, z)));

    const VectorField zero = VectorField::zero(c);
    const LocalGeometry ssm0(sm.g, ExactInverse{}, ConnectionSpec::ssm(zero), p);
    const LocalGeometry ssnm0(sm.g, ExactInverse{}, ConnectionSpec::ssnm(zero), p);
    const LocalGeometry apid(sm.g, ExactInverse{}, ConnectionSpec::ap(ProductStructure::identity(c)), p);
    const double r = plain.curvature(x, y, z, t);
    add("R-bar with P=0 equals R", r, ssm0.curvature(x, y, z, t), exact);
    add("R-hat with P=0 equals R", r, ssnm0.curvature(x, y, z, t), exact);
    add("R-tilde with J=id equals R", r, apid.curvature(x, y, z, t), exact);
  }
  if (notes) {
    notes->push_back("symmetries to 1e-8 absolute, reductions to 1e-12 absolute; dimensions 2-4");
    notes->push_back("recorded, not asserted: max |R-bar(X,Y,Z,T) + R-bar(Y,X,T,Z)| = " +
                     fmt("%.6g", literal));
  }
  return out;
}

// ------------------------------------------------------------ second oracle

std::vector<CaseRecord> christoffel_suite(const VerifyOptions& opts) {
  std::vector<CaseRecord> out;
  const std::string S = "christoffel";
  const std::uint64_t label = label_hash(S);
  for (int trial = 0; trial < opts.christoffel_n; ++trial) {
    const std::uint64_t seed = mix_seed(opts.seed, label, static_cast<std::uint64_t>(trial));
    Rng rng(seed);
    const int n = 2 + trial % 2;
    auto c = cube_chart(n);
    auto g = random_metric(rng, c);
    auto X = random_vector_field(rng, c), Y = random_vector_field(rng, c),
         Z = random_vector_field(rng, c), T = random_vector_field(rng, c);
    const Point p = random_regular_point(rng, g);
    CaseRecord r;
    r.suite = S;
    r.check = "koszul route vs Christoffel curvature";
    r.key = "dim=" + std::to_string(n);
    r.seed = seed;
    r.reference = oracle::christoffel_riemann(g, X, Y, Z, T, p);
    r.value = riemann(g, ExactInverse{}, X, Y, Z, T, p);
    r.cmp = compare(r.reference, r.value, opts.tol);
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------ catalog

std::vector<CaseRecord> catalog_suite(const VerifyOptions& opts, bool contractions) {
  std::vector<CaseRecord> out;
  for (const auto& row : catalog::rows()) {
    if ((row.object == ObjectKind::Contraction) != contractions) continue;
    for (const auto& it : row.items)
      for (auto& c : check_item(row, it, opts.seed, opts.n, opts.tol)) {
        CaseRecord r;
        r.suite = contractions ? "contraction" : "catalog";
        r.check = c.item;
        r.key = c.key;
        r.pattern = c.pattern;
        r.seed = c.seed;
        r.reference = c.oracle;
        r.value = c.catalog;
        r.cmp = c.cmp;
        r.has_amended = c.has_amended;
        r.amended = c.amended;
        r.amended_cmp = c.amended_cmp;
        if (c.has_amended) r.amendment = it.amendment;
        out.push_back(std::move(r));
      }
  }
  return out;
}

// ------------------------------------------------------------ fixtures

std::vector<CaseRecord> fixture_suite(const VerifyOptions& opts, const std::vector<std::string>& names) {
  std::vector<CaseRecord> out;
  for (const auto& name : names) {
    const FixtureInfo& fx = fixture(name);
    std::map<std::string, std::string> amendments;
    for (const auto* row : fixture_rows_of(name))
      for (const auto& it : row->items)
        if (it.amended) amendments[row->label(it)] = it.amendment;
    for (auto& f : check_fixture(name, params_for(opts, fx), opts.seed, opts.n, opts.tol)) {
      CaseRecord r;
      r.suite = "fixtures";
      r.check = f.item;
      r.key = f.key;
      r.pattern = f.pattern;
      r.seed = f.seed;
      r.reference = f.oracle;
      r.value = f.printed;
      r.cmp = f.printed_cmp;
      r.has_general = f.covered;
      r.general = f.general;
      r.general_item = f.general_item;
      r.general_cmp = f.general_cmp;
      r.has_amended = f.has_amended;
      r.amended = f.amended;
      r.amended_cmp = f.amended_cmp;
      if (f.has_amended) r.amendment = amendments[f.item];
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CaseRecord> fixture_spot_checks(const VerifyOptions& opts) {
  std::vector<CaseRecord> out;
  const FixtureInfo& fx = fixture("M1");
  FixtureParams params;
  params.b = "t^2";
  struct Spot {
    const char* row;
    const char* ordinal;
    const char* name;
  };
  const Spot spots[] = {{"M1/ssnm-koszul/P-base", "1", "M1 b=t^2, P=dt: K-hat(dt,dt,dt) = 1"},
                        {"M1/ssm-curvature/P-base", "4",
                         "M1 b=t^2, P=dt, t=0.5: R-bar(dt,V,W,dt) = -0.25 g_F(V,W)"}};
  int k = 0;
  for (const auto& s : spots) {
    const catalog::Row& row = fixture_row(s.row);
    const catalog::Item& item = item_of(row, s.ordinal);
    const std::uint64_t seed = mix_seed(opts.seed, label_hash(s.name), 0);
    CatalogInstance inst = draw_fixture(fx, params, row, item.patterns[0], {}, seed);
    inst.p[0] = 0.5;
    double reference = 1.0;
    if (k++ == 1) {
      const Point q = inst.M.project(inst.p, 1);
      reference = -0.25 * metric_eval(inst.M.factor(1).metric, inst.args[1].local, inst.args[2].local, q);
    }
    const double oracle = oracle_value(row, inst);
    const double printed = catalog::evaluate(row, item, 0, {}, inst.M, inst.args, inst.aux, inst.p);
    const ClosedForm cf = closed_form(inst.key, inst.M, inst.args, inst.aux, inst.p);
    const std::pair<const char*, double> three[] = {
        {" [oracle]", oracle}, {" [printed]", printed}, {" [general]", cf.covered ? cf.value : NAN}};
    for (const auto& [tag, v] : three) {
      CaseRecord r;
      r.suite = "fixtures";
      r.check = std::string(s.name) + tag;
      r.key = to_string(inst.key);
      r.pattern = item.patterns[0].text;
      r.seed = seed;
      r.reference = reference;
      r.value = v;
      r.cmp = compare(reference, v, opts.tol);
      if (!std::isfinite(v)) r.cmp.pass = false;
      out.push_back(std::move(r));
    }
  }
  return out;
}

// ------------------------------------------------------------ degenerate limit

LimitProbe degenerate_limit_probe(const std::string& twisting, std::uint64_t seed,
                                  const std::vector<std::string>& fiber_coords, bool require_hypothesis) {
  LimitProbe out;
  out.twisting = twisting;
  Rng rng(mix_seed(seed, label_hash("degenerate-limit"), label_hash(twisting)));
  auto base = make_chart("I", {"t"}, {{0.0, 2.0}});
  auto fib = make_chart("F", fiber_coords, std::vector<Interval>(fiber_coords.size(), {-1.0, 1.0}));
  std::vector<std::string> all_coords{"t"};
  all_coords.insert(all_coords.end(), fiber_coords.begin(), fiber_coords.end());
  auto all = make_chart("IxF", all_coords, std::vector<Interval>(all_coords.size(), {-2.0, 2.0}));
  const ScalarField b = ScalarField::parse(all, twisting);
  const MetricField gF = random_metric(rng, fib);
  const ProductManifold M =
      build_twisted({{base, MetricField::diagonal(base, {Expr(-1.0)})}, {fib, gF}, b});

  // hypothesis: db = 0 wherever b = 0 on the slice t = 0
  const Point q = random_regular_point(rng, gF, 1e-2, 0.2);
  Point p0{0.0};
  p0.insert(p0.end(), q.begin(), q.end());
  const Jet2 j0 = b.jet(p0);
  double grad = 0.0;
  for (int a = 0; a < all->dim(); ++a) grad = std::max(grad, std::abs(j0.grad(a)));
  if (std::abs(j0.value) > 1e-12) {
    out.skipped = true;
    out.reason = "b does not vanish at t = 0";
    return out;
  }
  out.hypothesis = grad < 1e-12;
  if (!out.hypothesis && require_hypothesis) {
    out.skipped = true;
    out.reason = "db does not vanish on {b = 0} (|db| = " + fmt("%.6g", grad) + ")";
    return out;
  }

  // points (t_k, q) with b = 10^-k
  auto at = [&](double t) {
    Point p{t};
    p.insert(p.end(), q.begin(), q.end());
    return p;
  };
  std::vector<Point> pts;
  for (int k = 2; k <= kLimitSteps; ++k) {
    const double target = std::pow(10.0, -k);
    double lo = 0.0, hi = 1.0;
    while (std::abs(b(at(hi))) < target && hi < 1e3) hi *= 2.0;
    if (std::abs(b(at(hi))) < target) {
      out.skipped = true;
      out.reason = "b does not reach " + fmt("%g", target) + " along t";
      return out;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (std::abs(b(at(mid))) < target ? lo : hi) = mid;
    }
    pts.push_back(at(hi));
    out.b_values.push_back(b(at(hi)));
  }

  const catalog::Row* row =
      catalog::find_row(ConnectionKind::Plain, ObjectKind::Contraction, ProductKind::Twisted, PLocation::Kind::None);
  std::map<char, LiftedField> fields;
  for (char c : std::string("XYZT")) fields[c] = M.lift(random_vector_field(rng, base), kBase);
  for (char c : std::string("VWUQ")) fields[c] = M.lift(random_vector_field(rng, fib), 1);
  for (const auto& item : row->items) {
    if (item.ordinal > "5" || item.ordinal.size() > 1) continue;
    const catalog::Pattern& pat = item.patterns[0];
    LimitProbe::Series s;
    s.item = row->label(item);
    s.pattern = pat.text;
    CatalogInstance inst;
    inst.M = M;
    inst.key.connection = row->connection;
    inst.key.object = row->object;
    inst.key.product = row->product;
    for (const auto& slot : pat.slots) {
      inst.args.push_back(fields.at(slot.name));
      inst.key.arg_tags.push_back(inst.args.back().tag);
    }
    for (const auto& p : pts) {
      inst.p = p;
      s.catalog.push_back(catalog::evaluate(*row, item, 0, {}, M, inst.args, inst.aux, p));
      s.oracle.push_back(oracle_value(*row, inst));
    }
    for (double v : s.catalog) s.bound = std::max(s.bound, std::abs(v));
    const size_t n = s.catalog.size();
    for (size_t a = n - 3; a < n; ++a)
      for (size_t c = a + 1; c < n; ++c) s.cauchy = std::max(s.cauchy, std::abs(s.catalog[a] - s.catalog[c]));
    s.converges = std::isfinite(s.bound) && s.bound < 1e6 && s.cauchy < 1e-6;
    out.series.push_back(std::move(s));
  }
  return out;
}

// ------------------------------------------------------------ findings

std::vector<Finding> collect_findings(const std::vector<CaseRecord>& records) {
  std::vector<Finding> out;
  std::map<std::pair<std::string, std::string>, size_t> at;
  std::map<size_t, bool> amended_all;
  for (const auto& r : records) {
    if (r.pass()) continue;
    const auto key = std::make_pair(r.suite, r.check);
    if (!at.count(key)) {
      at[key] = out.size();
      Finding f;
      f.suite = r.suite;
      f.check = r.check;
      f.amendment = r.amendment;
      out.push_back(std::move(f));
      amended_all[at[key]] = true;
    }
  }
  for (const auto& r : records) {
    auto it = at.find({r.suite, r.check});
    if (it == at.end()) continue;
    Finding& f = out[it->second];
    ++f.cases;
    if (r.has_amended && !r.amended_cmp.pass) amended_all[it->second] = false;
    if (r.has_general && !r.general_cmp.pass) f.general_fails = true;
    if (r.pass()) continue;
    ++f.failures;
    const double rel = std::max(r.cmp.rel_err, r.has_general ? r.general_cmp.rel_err : 0.0);
    const double abs = std::max(r.cmp.abs_err, r.has_general ? r.general_cmp.abs_err : 0.0);
    if (f.failures == 1 || rel > f.worst_rel) {
      f.worst_rel = rel;
      f.worst_abs = abs;
      f.example_key = r.key;
      f.example_pattern = r.pattern;
      f.example_seed = r.seed;
    }
  }
  for (size_t i = 0; i < out.size(); ++i) out[i].amended_passes = !out[i].amendment.empty() && amended_all[i];
  return out;
}

// ------------------------------------------------------------ runner

VerifyReport run_verify(const std::vector<std::string>& suites, const VerifyOptions& opts) {
  std::vector<std::string> run;
  for (const auto& s : suites) {
    if (s == "all") {
      run = suite_names();
      break;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw SpecError("unknown suite '" + s + "'");
    if (std::find(run.begin(), run.end(), s) == run.end()) run.push_back(s);
  }
  VerifyReport rep;
  rep.options = opts;
  const auto t_all = Clock::now();
  for (const auto& name : run) {
    const auto t0 = Clock::now();
    SuiteSummary sum;
    sum.name = name;
    std::vector<CaseRecord> recs;
    if (name == "identities") recs = identity_suite(opts, &sum.notes);
    else if (name == "curvature") recs = curvature_suite(opts, &sum.notes);
    else if (name == "christoffel") recs = christoffel_suite(opts);
    else if (name == "catalog") recs = catalog_suite(opts, false);
    else if (name == "contraction") {
      recs = catalog_suite(opts, true);
      sum.notes.push_back("contraction rows are reported apart from the catalog suite");
    } else if (name == "fixtures") {
      std::vector<std::string> names;
      for (const auto& f : fixtures()) names.push_back(f.name);
      recs = fixture_suite(opts, names);
      auto spot = fixture_spot_checks(opts);
      recs.insert(recs.end(), spot.begin(), spot.end());
      const FixtureInfo& m4 = fixture("M4");
      rep.probes.push_back(
          degenerate_limit_probe(params_for(opts, m4).b, opts.seed, {"u1", "v1"}, true));
      if (rep.probes.back().skipped) sum.notes.push_back("M4 degenerate-limit probe skipped: " + rep.probes.back().reason);
    } else if (name == "degenerate-limit") {
      LimitProbe h = degenerate_limit_probe(opts.limit_hypothesis, opts.seed);
      LimitProbe c = degenerate_limit_probe(opts.limit_counterexample, opts.seed);
      const bool hyp_ok = !h.skipped && h.hypothesis && h.converges();
      const bool div_ok = !c.skipped && !c.hypothesis && !c.converges();
      sum.cases = 2;
      sum.failures = (hyp_ok ? 0 : 1) + (div_ok ? 0 : 1);
      sum.notes.push_back(std::string("hypothesis case ") + (hyp_ok ? "bounded and Cauchy" : "did not converge"));
      sum.notes.push_back(std::string("counterexample ") +
                          (div_ok ? "diverges" : "no divergence recorded: every listed contraction stays bounded and Cauchy"));
      rep.probes.push_back(std::move(h));
      rep.probes.push_back(std::move(c));
    }
    for (const auto& r : recs) {
      ++sum.cases;
      if (!r.pass()) ++sum.failures;
    }
    sum.pass = sum.failures == 0;
    sum.seconds = seconds_since(t0);
    rep.records.insert(rep.records.end(), std::make_move_iterator(recs.begin()),
                       std::make_move_iterator(recs.end()));
    rep.suites.push_back(std::move(sum));
  }
  rep.findings = collect_findings(rep.records);
  rep.seconds = seconds_since(t_all);
  return rep;
}

// ------------------------------------------------------------ output

namespace {

using json = nlohmann::ordered_json;

json num(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

json cmp_json(const Comparison& c) {
  return {{"abs_err", num(c.abs_err)}, {"rel_err", num(c.rel_err)}, {"pass", c.pass}};
}

json record_json(const CaseRecord& r) {
  json j = {{"suite", r.suite}, {"item", r.check}, {"key", r.key},
            {"pattern", r.pattern}, {"seed", r.seed}, {"reference", num(r.reference)},
            {"value", num(r.value)}, {"abs_err", num(r.cmp.abs_err)}, {"rel_err", num(r.cmp.rel_err)},
            {"pass", r.pass()}};
  if (r.has_general)
    j["general"] = {{"item", r.general_item}, {"value", num(r.general)}, {"cmp", cmp_json(r.general_cmp)}};
  if (r.has_amended)
    j["amended"] = {{"reading", r.amendment}, {"value", num(r.amended)}, {"cmp", cmp_json(r.amended_cmp)}};
  return j;
}

json body_json(const VerifyReport& r) {
  const auto& o = r.options;
  json j;
  j["report"] = "koszul verify";
  j["options"] = {{"seed", o.seed},
                  {"n", o.n},
                  {"tol_rel", o.tol.rel},
                  {"tol_abs", o.tol.abs},
                  {"identity_n", o.identity_n},
                  {"curvature_n", o.curvature_n},
                  {"christoffel_n", o.christoffel_n}};
  j["pass"] = r.pass();
  json suites = json::array();
  for (const auto& s : r.suites)
    suites.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures},
                      {"pass", s.pass}, {"notes", s.notes}});
  j["suites"] = suites;
  json findings = json::array();
  for (const auto& f : r.findings) {
    json fj = {{"kind", f.suite == "catalog" || f.suite == "contraction" || f.suite == "fixtures"
                            ? "discrepancy finding" : "identity failure"},
               {"suite", f.suite}, {"item", f.check}, {"cases", f.cases}, {"failures", f.failures},
               {"worst_rel_err", num(f.worst_rel)}, {"worst_abs_err", num(f.worst_abs)},
               {"example", {{"key", f.example_key}, {"pattern", f.example_pattern}, {"seed", f.example_seed}}}};
    if (!f.amendment.empty()) fj["amended_reading"] = {{"reading", f.amendment}, {"passes", f.amended_passes}};
    if (f.suite == "fixtures") fj["general_table_fails_too"] = f.general_fails;
    findings.push_back(fj);
  }
  j["findings"] = findings;
  std::vector<const CaseRecord*> bad;
  for (const auto& rec : r.records)
    if (!rec.pass()) bad.push_back(&rec);
  std::stable_sort(bad.begin(), bad.end(), [](const CaseRecord* a, const CaseRecord* b) {
    const double ra = std::isnan(a->cmp.rel_err) ? 0.0 : a->cmp.rel_err;
    const double rb = std::isnan(b->cmp.rel_err) ? 0.0 : b->cmp.rel_err;
    if (ra != rb) return ra > rb;
    return a->cmp.abs_err > b->cmp.abs_err;
  });
  json worst = json::array();
  for (size_t i = 0; i < bad.size() && i < 10; ++i) worst.push_back(record_json(*bad[i]));
  j["worst_offenders"] = worst;
  json probes = json::array();
  for (const auto& p : r.probes) {
    json pj = {{"twisting", p.twisting}, {"hypothesis_db_vanishes_on_b_zero", p.hypothesis},
               {"skipped", p.skipped}};
    if (p.skipped) pj["reason"] = p.reason;
    else {
      pj["converges"] = p.converges();
      json bv = json::array();
      for (double v : p.b_values) bv.push_back(num(v));
      pj["b_values"] = bv;
      json ss = json::array();
      for (const auto& s : p.series) {
        json c = json::array(), o = json::array();
        for (double v : s.catalog) c.push_back(num(v));
        for (double v : s.oracle) o.push_back(num(v));
        ss.push_back({{"item", s.item}, {"pattern", s.pattern}, {"catalog", c}, {"oracle", o},
                      {"bound", num(s.bound)}, {"cauchy_gap", num(s.cauchy)}, {"converges", s.converges}});
      }
      pj["series"] = ss;
    }
    probes.push_back(pj);
  }
  j["degenerate_limit"] = probes;
  json recs = json::array();
  for (const auto& rec : r.records) recs.push_back(record_json(rec));
  j["records"] = recs;
  return j;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string report_body(const VerifyReport& r) { return body_json(r).dump(2) + "\n"; }

std::string body_hash(const std::string& body) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(label_hash(body)));
  return buf;
}

std::string report_json(const VerifyReport& r) {
  json j = body_json(r);
  const std::string body = j.dump(2) + "\n";
  json timing = {{"total_seconds", r.seconds}};
  for (const auto& s : r.suites) timing["suites"][s.name] = s.seconds;
  j["timing"] = timing;
  j["body_hash"] = body_hash(body);
  return j.dump(2) + "\n";
}

std::string report_csv(const VerifyReport& r) {
  std::ostringstream os;
  os << "suite,item,key,pattern,seed,reference,value,abs_err,rel_err,pass,general_item,general,general_pass,"
        "amended,amended_pass\n";
  for (const auto& c : r.records) {
    os << csv_field(c.suite) << ',' << csv_field(c.check) << ',' << csv_field(c.key) << ','
       << csv_field(c.pattern) << ',' << c.seed << ',' << csv_num(c.reference) << ',' << csv_num(c.value)
       << ',' << csv_num(c.cmp.abs_err) << ',' << csv_num(c.cmp.rel_err) << ',' << (c.pass() ? 1 : 0) << ',';
    if (c.has_general)
      os << csv_field(c.general_item) << ',' << csv_num(c.general) << ',' << (c.general_cmp.pass ? 1 : 0);
    else
      os << ",,";
    os << ',';
    if (c.has_amended) os << csv_num(c.amended) << ',' << (c.amended_cmp.pass ? 1 : 0);
    else os << ',';
    os << '\n';
  }
  return os.str();
}

}  // namespace kg
