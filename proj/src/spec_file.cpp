#include "koszul/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "koszul/errors.hpp"

namespace kg {

namespace {

using json = nlohmann::json;

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(where + ": missing '" + key + "'");
  return j.at(key);
}

std::string text_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << j.get<double>();
    return os.str();
  }
  throw SpecError(where + ": expected an expression string");
}

std::string name_of(const json& j, const std::string& section) {
  const json& n = need(j, "name", section);
  if (!n.is_string() || n.get<std::string>().empty()) throw SpecError(section + ": bad name");
  return n.get<std::string>();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    const auto a = cur.find_first_not_of(" \t");
    const auto b = cur.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
  }
  return out;
}

ConnectionKind kind_of(const std::string& k) {
  if (k == "plain" || k == "levi-civita") return ConnectionKind::Plain;
  if (k == "ssm") return ConnectionKind::SemiSymMetric;
  if (k == "ssnm") return ConnectionKind::SemiSymNonMetric;
  if (k == "ap") return ConnectionKind::AlmostProduct;
  throw SpecError("unknown connection kind '" + k + "'");
}

template <class Map>
void add_unique(Map& m, const std::string& name, typename Map::mapped_type v, const char* what) {
  if (!m.emplace(name, std::move(v)).second) throw SpecError(std::string("duplicate ") + what + " '" + name + "'");
}

}  // namespace

ChartPtr SpecFile::chart_ref(const std::string& name) const {
  auto it = charts_.find(name);
  if (it == charts_.end()) throw SpecError("unknown chart '" + name + "'");
  return it->second;
}

const MetricField& SpecFile::metric_ref(const std::string& name) const {
  auto it = metrics_.find(name);
  if (it == metrics_.end()) throw SpecError("unknown metric '" + name + "'");
  return it->second;
}

SpecFile SpecFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

SpecFile SpecFile::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed spec document: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("spec document must be an object");
  SpecFile s;
  auto list = [&](const char* key) {
    if (!doc.contains(key)) return json::array();
    if (!doc[key].is_array()) throw SpecError(std::string("section '") + key + "' must be a list");
    return doc[key];
  };

  for (const auto& c : list("charts")) {
    const std::string name = name_of(c, "charts");
    std::vector<std::string> coords;
    for (const auto& x : need(c, "coords", "chart " + name)) coords.push_back(x.get<std::string>());
    std::vector<Interval> dom;
    if (c.contains("domain")) {
      for (const auto& iv : c["domain"]) {
        if (!iv.is_array() || iv.size() != 2) throw SpecError("chart " + name + ": domain entries are [lo, hi]");
        dom.push_back({iv[0].get<double>(), iv[1].get<double>()});
      }
      if (dom.size() != coords.size()) throw SpecError("chart " + name + ": one interval per coordinate");
    }
    add_unique(s.charts_, name, make_chart(name, coords, dom), "chart");
  }

  for (const auto& m : list("metrics")) {
    const std::string name = name_of(m, "metrics");
    const std::string where = "metric " + name;
    auto chart = s.chart_ref(need(m, "chart", where).get<std::string>());
    if (m.contains("diagonal")) {
      std::vector<Expr> d;
      for (const auto& e : m["diagonal"]) d.push_back(ScalarField::parse(chart, text_of(e, where)).expr);
      if (static_cast<int>(d.size()) != chart->dim()) throw SpecError(where + ": wrong diagonal length");
      add_unique(s.metrics_, name, MetricField::diagonal(chart, d), "metric");
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : need(m, "matrix", where)) {
        rows.emplace_back();
        for (const auto& e : r) rows.back().push_back(text_of(e, where));
      }
      add_unique(s.metrics_, name, MetricField::parse(chart, rows), "metric");
    }
  }

  for (const auto& f : list("fields")) {
    const std::string name = name_of(f, "fields");
    const std::string cname = need(f, "chart", "field " + name).get<std::string>();
    std::vector<std::string> comps;
    for (const auto& e : need(f, "components", "field " + name)) comps.push_back(text_of(e, "field " + name));
    add_unique(s.fields_, name, {cname, VectorField::parse(s.chart_ref(cname), comps)}, "field");
  }

  for (const auto& j : list("structures")) {
    const std::string name = name_of(j, "structures");
    auto chart = s.chart_ref(need(j, "chart", "structure " + name).get<std::string>());
    std::vector<std::vector<double>> m;
    for (const auto& r : need(j, "matrix", "structure " + name)) m.push_back(r.get<std::vector<double>>());
    add_unique(s.structures_, name, ProductStructure::constant(chart, m), "structure");
  }

  for (const auto& c : list("connections")) {
    const std::string name = name_of(c, "connections");
    Connection con;
    con.kind = kind_of(need(c, "kind", "connection " + name).get<std::string>());
    if (c.contains("P")) con.P = c["P"].get<std::string>();
    if (c.contains("J")) con.J = c["J"].get<std::vector<std::string>>();
    add_unique(s.connections_, name, con, "connection");
  }

  for (const auto& [name, g] : s.metrics_) {
    Space sp;
    sp.name = name;
    sp.metric = g;
    s.spaces_.emplace(name, sp);
  }

  auto factor = [&](const json& j, const std::string& where) {
    return FactorData{s.chart_ref(need(j, "chart", where).get<std::string>()),
                      s.metric_ref(need(j, "metric", where).get<std::string>())};
  };

  for (const auto& p : list("products")) {
    const std::string name = name_of(p, "products");
    const std::string where = "product " + name;
    const std::string kind = need(p, "kind", where).get<std::string>();
    Space sp;
    sp.name = name;
    const FactorData base = factor(need(p, "base", where), where + " base");
    sp.factor_charts.push_back(base.chart->name());
    if (kind == "warped" || kind == "multiply-warped") {
      MultiplyWarpedSpec spec;
      spec.base = base;
      for (const auto& f : need(p, "fibers", where)) {
        spec.fibers.push_back(factor(f, where + " fiber"));
        spec.warpings.push_back(ScalarField::parse(base.chart, text_of(need(f, "warping", where), where)));
        sp.factor_charts.push_back(spec.fibers.back().chart->name());
      }
      sp.product = build_multiply_warped(spec);
    } else if (kind == "twisted") {
      const FactorData fib = factor(need(p, "fiber", where), where + " fiber");
      sp.factor_charts.push_back(fib.chart->name());
      std::vector<std::string> coords = base.chart->coords();
      for (const auto& c : fib.chart->coords()) coords.push_back(c);
      auto all = make_chart(name, coords);
      sp.product = build_twisted({base, fib, ScalarField::parse(all, text_of(need(p, "twisting", where), where))});
    } else {
      throw SpecError(where + ": kind must be warped or twisted");
    }
    add_unique(s.spaces_, name, sp, "space");
  }

  for (const auto& f : list("fixtures")) {
    const std::string name = name_of(f, "fixtures");
    const std::string where = "fixture " + name;
    const FixtureInfo& fx = fixture(f.value("fixture", name));
    Space sp;
    sp.name = name;
    sp.fixture = fx.name;
    sp.params = fx.defaults;
    if (f.contains("b")) sp.params.b = text_of(f["b"], where);
    if (f.contains("phi")) sp.params.phi = text_of(f["phi"], where);
    if (f.contains("p")) sp.params.p = f["p"].get<std::vector<double>>();
    ChartPtr base = fixture_base_chart(fx);
    if (f.contains("base_chart")) base = s.chart_ref(f["base_chart"].get<std::string>());
    if (base->dim() != 1) throw SpecError(where + ": the base chart has the single coordinate t");
    s.charts_.emplace(base->name(), base);
    sp.factor_charts.push_back(base->name());
    std::vector<FactorData> fibers;
    for (const auto& fb : need(f, "fibers", where)) {
      fibers.push_back(factor(fb, where + " fiber"));
      sp.factor_charts.push_back(fibers.back().chart->name());
    }
    sp.product = build_fixture(fx, sp.params, base, fibers);
    add_unique(s.spaces_, name, sp, "space");
    s.verify_.fixture_params.emplace_back(fx.name, sp.params);
  }

  if (doc.contains("verify")) {
    const json& v = doc["verify"];
    s.verify_.seed = v.value("seed", s.verify_.seed);
    s.verify_.n = v.value("n", s.verify_.n);
    s.verify_.tol.rel = v.value("tol_rel", s.verify_.tol.rel);
    s.verify_.tol.abs = v.value("tol_abs", s.verify_.tol.abs);
    if (v.contains("degenerate_limit")) {
      const json& d = v["degenerate_limit"];
      s.verify_.limit_hypothesis = d.value("hypothesis", s.verify_.limit_hypothesis);
      s.verify_.limit_counterexample = d.value("counterexample", s.verify_.limit_counterexample);
    }
  }
  return s;
}

const SpecFile::Space& SpecFile::space(const std::string& name) const {
  auto it = spaces_.find(name);
  if (it == spaces_.end()) throw SpecError("no metric, product or fixture named '" + name + "'");
  return it->second;
}

const SpecFile::Connection& SpecFile::connection(const std::string& name) const {
  auto it = connections_.find(name);
  if (it == connections_.end()) throw SpecError("unknown connection '" + name + "'");
  return it->second;
}

const ProductStructure& SpecFile::structure(const std::string& name) const {
  auto it = structures_.find(name);
  if (it == structures_.end()) throw SpecError("unknown structure '" + name + "'");
  return it->second;
}

std::vector<std::string> SpecFile::space_names() const {
  std::vector<std::string> out;
  for (const auto& [n, _] : spaces_) out.push_back(n);
  return out;
}

std::string SpecFile::field_chart(const std::string& name, const Space& on) const {
  if (auto it = fields_.find(name); it != fields_.end()) return it->second.first;
  if (name.size() > 1 && name[0] == 'd') {
    const std::string coord = name.substr(1);
    std::vector<std::string> charts = on.factor_charts;
    if (charts.empty()) charts.push_back(on.chart()->name());
    for (const auto& c : charts)
      if (chart_ref(c)->index_of(coord) >= 0) return c;
  }
  throw SpecError("unknown field '" + name + "'");
}

VectorField SpecFile::field(const std::string& name, const ChartPtr& chart) const {
  if (auto it = fields_.find(name); it != fields_.end()) {
    if (it->second.first != chart->name())
      throw SpecError("field '" + name + "' lives on chart " + it->second.first + ", not " + chart->name());
    return it->second.second;
  }
  if (name.size() > 1 && name[0] == 'd') {
    const int i = chart->index_of(name.substr(1));
    if (i >= 0) return VectorField::coordinate(chart, i);
  }
  throw SpecError("unknown field '" + name + "' on chart " + chart->name());
}

std::pair<ConnectionKind, Quantity> parse_object(const std::string& n) {
  static const std::map<std::string, std::pair<ConnectionKind, Quantity>> names = {
      {"koszul", {ConnectionKind::Plain, Quantity::Koszul}},
      {"K", {ConnectionKind::Plain, Quantity::Koszul}},
      {"ssm-koszul", {ConnectionKind::SemiSymMetric, Quantity::Koszul}},
      {"Kbar", {ConnectionKind::SemiSymMetric, Quantity::Koszul}},
      {"ssnm-koszul", {ConnectionKind::SemiSymNonMetric, Quantity::Koszul}},
      {"Khat", {ConnectionKind::SemiSymNonMetric, Quantity::Koszul}},
      {"ap-koszul", {ConnectionKind::AlmostProduct, Quantity::Koszul}},
      {"Ktilde", {ConnectionKind::AlmostProduct, Quantity::Koszul}},
      {"riemann", {ConnectionKind::Plain, Quantity::Curvature}},
      {"R", {ConnectionKind::Plain, Quantity::Curvature}},
      {"ssm-curvature", {ConnectionKind::SemiSymMetric, Quantity::Curvature}},
      {"Rbar", {ConnectionKind::SemiSymMetric, Quantity::Curvature}},
      {"ssnm-curvature", {ConnectionKind::SemiSymNonMetric, Quantity::Curvature}},
      {"Rhat", {ConnectionKind::SemiSymNonMetric, Quantity::Curvature}},
      {"ap-curvature", {ConnectionKind::AlmostProduct, Quantity::Curvature}},
      {"Rtilde", {ConnectionKind::AlmostProduct, Quantity::Curvature}},
      {"contraction", {ConnectionKind::Plain, Quantity::Contraction}},
  };
  auto it = names.find(n);
  if (it == names.end()) throw SpecError("unknown object '" + n + "'");
  return it->second;
}

Point parse_point(const std::string& text, const Chart& chart) {
  const auto parts = split(text, ',');
  Point p(chart.dim(), NAN);
  const bool named = text.find('=') != std::string::npos;
  if (!named && static_cast<int>(parts.size()) != chart.dim())
    throw SpecError("point needs " + std::to_string(chart.dim()) + " coordinates, got " +
                    std::to_string(parts.size()));
  for (size_t k = 0; k < parts.size(); ++k) {
    std::string val = parts[k];
    int i = static_cast<int>(k);
    if (named) {
      const auto eq = parts[k].find('=');
      if (eq == std::string::npos) throw SpecError("point entry '" + parts[k] + "' is not coord=value");
      const auto kv = split(parts[k], '=');
      i = chart.index_of(kv[0]);
      if (i < 0) throw SpecError("point names unknown coordinate '" + kv[0] + "'");
      val = kv[1];
    }
    try {
      size_t used = 0;
      p[i] = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::logic_error&) {
      throw SpecError("bad coordinate value '" + val + "'");
    }
  }
  for (int i = 0; i < chart.dim(); ++i)
    if (std::isnan(p[i])) throw SpecError("point is missing coordinate '" + chart.coords()[i] + "'");
  return p;
}

EvalResult evaluate(const SpecFile& spec, const EvalRequest& req) {
  const auto [kind, quantity] = parse_object(req.object);
  const size_t arity = quantity == Quantity::Koszul ? 3 : 4;
  if (req.args.size() != arity)
    throw SpecError(req.object + " takes " + std::to_string(arity) + " arguments, got " +
                    std::to_string(req.args.size()));
  const SpecFile::Space& sp = spec.space(req.on);
  SpecFile::Connection con;
  if (!req.connection.empty()) {
    con = spec.connection(req.connection);
    if (con.kind != kind) throw SpecError("connection '" + req.connection + "' does not match " + req.object);
  }
  con.kind = kind;
  if (!req.P.empty()) con.P = req.P;
  if (!req.J.empty()) con.J = req.J;
  const bool needs_P = kind == ConnectionKind::SemiSymMetric || kind == ConnectionKind::SemiSymNonMetric;
  if (needs_P && con.P.empty()) throw SpecError(req.object + " needs P");
  if (kind == ConnectionKind::AlmostProduct && con.J.empty()) throw SpecError(req.object + " needs J");

  ChartPtr chart = sp.chart();
  const Point p = parse_point(req.point, *chart);
  chart->check_point(p);

  EvalResult out;
  ConnectionSpec cs;
  std::vector<VectorField> args;
  std::vector<LiftedField> lifted;
  CatalogAux aux;
  CatalogKey key;

  if (sp.product) {
    const ProductManifold& M = *sp.product;
    auto tag_of = [&](const std::string& f) {
      const std::string c = spec.field_chart(f, sp);
      for (size_t t = 0; t < sp.factor_charts.size(); ++t)
        if (sp.factor_charts[t] == c) return static_cast<FactorTag>(t);
      throw SpecError("field '" + f + "' is not on a factor of " + req.on);
    };
    auto lift = [&](const std::string& f) {
      const FactorTag t = tag_of(f);
      return M.lift(spec.field(f, M.factor(t).chart), t);
    };
    for (const auto& a : req.args) {
      lifted.push_back(lift(a));
      args.push_back(lifted.back().field);
      key.arg_tags.push_back(lifted.back().tag);
    }
    if (needs_P) {
      aux.P = lift(con.P);
      cs = kind == ConnectionKind::SemiSymMetric ? ConnectionSpec::ssm(aux.P->field) : ConnectionSpec::ssnm(aux.P->field);
      key.p = aux.P->tag == kBase ? PLocation::base() : PLocation::in_fiber(aux.P->tag);
    } else if (kind == ConnectionKind::AlmostProduct) {
      if (con.J.size() != M.factors.size())
        throw SpecError("J needs one structure per factor (" + std::to_string(M.factors.size()) + ")");
      for (size_t t = 0; t < con.J.size(); ++t) {
        const ProductStructure& J = spec.structure(con.J[t]);
        if (J.chart->name() != sp.factor_charts[t])
          throw SpecError("structure '" + con.J[t] + "' is not on factor chart " + sp.factor_charts[t]);
        aux.J.push_back(J);
      }
      cs = ConnectionSpec::ap(M.lift_structure(aux.J));
    }
    key.connection = kind;
    key.object = quantity == Quantity::Koszul ? ObjectKind::KoszulForm
                 : quantity == Quantity::Curvature ? ObjectKind::Curvature : ObjectKind::Contraction;
    key.product = M.kind;
    out.key = to_string(key);
    for (int j = 1; j <= M.fiber_count(); ++j) {
      const double b = M.warping(j)(p);
      if (!std::isfinite(b) || b == 0.0)
        throw SingularMetric("warping b_" + std::to_string(j) + " vanishes at the point");
    }
    if (req.catalog) {
      const ClosedForm cf = closed_form(key, M, lifted, aux, p);
      if (!cf.covered) throw CaseMismatch("no catalog item for " + out.key);
      out.value = cf.value;
      out.item = cf.item;
      return out;
    }
    const LocalGeometry lg(M.metric, M.cometric, cs, p);
    std::vector<JetVec> a;
    for (const auto& x : args) a.push_back(lg.field(x));
    if (quantity == Quantity::Koszul) out.value = lg.koszul(a[0], a[1], a[2]);
    else if (quantity == Quantity::Curvature) out.value = lg.curvature(a[0], a[1], a[2], a[3]);
    else out.value = lg.gstar(lg.flat(a[0], a[1]), lg.flat(a[2], a[3]));
    return out;
  }

  if (req.catalog) throw SpecError("the catalog covers product spaces only");
  const MetricField& g = *sp.metric;
  for (const auto& a : req.args) args.push_back(spec.field(a, g.chart()));
  if (needs_P) {
    const VectorField P = spec.field(con.P, g.chart());
    cs = kind == ConnectionKind::SemiSymMetric ? ConnectionSpec::ssm(P) : ConnectionSpec::ssnm(P);
  } else if (kind == ConnectionKind::AlmostProduct) {
    if (con.J.size() != 1) throw SpecError("J takes a single structure on a plain chart");
    cs = ConnectionSpec::ap(spec.structure(con.J[0]));
  }
  const LocalGeometry lg(g, ExactInverse{}, cs, p);
  std::vector<JetVec> a;
  for (const auto& x : args) a.push_back(lg.field(x));
  if (quantity == Quantity::Koszul) out.value = lg.koszul(a[0], a[1], a[2]);
  else if (quantity == Quantity::Curvature) out.value = lg.curvature(a[0], a[1], a[2], a[3]);
  else out.value = lg.gstar(lg.flat(a[0], a[1]), lg.flat(a[2], a[3]));
  return out;
}

}  // namespace kg
