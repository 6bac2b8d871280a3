#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "catalog_dsl.hpp"
#include "koszul/errors.hpp"

namespace kg {

const char* to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::KoszulForm: return "koszul";
    case ObjectKind::Curvature: return "curvature";
    case ObjectKind::Contraction: return "contraction";
  }
  return "?";
}

std::string to_string(const PLocation& p) {
  switch (p.kind) {
    case PLocation::Kind::None: return "none";
    case PLocation::Kind::Base: return "base";
    case PLocation::Kind::Fiber: return "fiber" + std::to_string(p.fiber);
  }
  return "?";
}

std::string to_string(const CatalogKey& key) {
  std::ostringstream os;
  os << to_string(key.connection) << '/' << to_string(key.object) << '/' << to_string(key.product)
     << "/P=" << to_string(key.p) << '/';
  for (size_t a = 0; a < key.arg_tags.size(); ++a) {
    if (a) os << ',';
    os << (key.arg_tags[a] == kBase ? std::string("B") : "F" + std::to_string(key.arg_tags[a]));
  }
  return os.str();
}

namespace catalog {

namespace {
thread_local const Ctx* current = nullptr;

bool is_base_letter(char c) { return c == 'X' || c == 'Y' || c == 'Z' || c == 'T'; }
}  // namespace

bool Slot::base() const { return is_base_letter(name); }

const Ctx& ctx() {
  if (!current) throw std::logic_error("catalog formula evaluated without a context");
  return *current;
}

CtxScope::CtxScope(const Ctx& c) : prev_(current) { current = &c; }
CtxScope::~CtxScope() { current = prev_; }

Ctx::Ctx(const ProductManifold& M_, const Point& p_, const CatalogAux& aux, const Binding& bind,
         std::map<char, const LiftedField*> args)
    : M(M_), p(p_), aux_(aux), bind_(bind), args_(std::move(args)) {}

int Ctx::ix(char c) const {
  auto it = bind_.find(c);
  return it == bind_.end() ? -1 : it->second;
}

const LiftedField& Ctx::lifted(A a) const {
  const LiftedField* base = nullptr;
  if (a.name == 'P') {
    if (!aux_.P) throw std::logic_error("formula uses P but none is installed");
    base = &*aux_.P;
  } else {
    auto it = args_.find(a.name);
    if (it == args_.end()) throw std::logic_error(std::string("formula uses unbound argument ") + a.name);
    base = it->second;
  }
  if (!a.j) return *base;
  const auto key = std::make_pair(a.name, true);
  auto it = j_fields_.find(key);
  if (it != j_fields_.end()) return it->second;
  if (aux_.J.empty()) throw std::logic_error("formula applies J but none is installed");
  const VectorField jl = aux_.J.at(base->tag).apply(base->local);
  return j_fields_.emplace(key, M.lift(jl, base->tag)).first->second;
}

FactorTag Ctx::factor_of(A a) const { return lifted(a).tag; }

const JetVec& Ctx::product_jet(A a) const {
  const auto key = std::make_pair(a.name, a.j);
  auto it = prod_jets_.find(key);
  if (it != prod_jets_.end()) return it->second;
  return prod_jets_.emplace(key, jet_of(lifted(a).field, p)).first->second;
}

const JetVec& Ctx::local_jet(A a) const {
  const auto key = std::make_pair(a.name, a.j);
  auto it = local_jets_.find(key);
  if (it != local_jets_.end()) return it->second;
  const LiftedField& lf = lifted(a);
  return local_jets_.emplace(key, jet_of(lf.local, M.project(p, lf.tag))).first->second;
}

const Jet2& Ctx::warping_jet(int j) const {
  if (j < 1) throw std::logic_error("warping index unbound in formula");
  auto it = b_jets_.find(j);
  if (it != b_jets_.end()) return it->second;
  return b_jets_.emplace(j, M.warping(j).jet(p)).first->second;
}

const LocalGeometry& Ctx::geometry(FactorTag f, ConnectionKind k) const {
  const auto key = std::make_pair(f, static_cast<int>(k));
  auto it = geoms_.find(key);
  if (it != geoms_.end()) return *it->second;
  const Factor& fac = M.factor(f);
  ConnectionSpec spec;
  switch (k) {
    case ConnectionKind::Plain: break;
    case ConnectionKind::SemiSymMetric:
    case ConnectionKind::SemiSymNonMetric: {
      if (!aux_.P) throw std::logic_error("semi-symmetric factor form without P");
      VectorField Pl = aux_.P->tag == f ? aux_.P->local : VectorField::zero(fac.chart);
      spec = k == ConnectionKind::SemiSymMetric ? ConnectionSpec::ssm(Pl) : ConnectionSpec::ssnm(Pl);
      break;
    }
    case ConnectionKind::AlmostProduct:
      if (aux_.J.empty()) throw std::logic_error("almost product factor form without J");
      spec = ConnectionSpec::ap(aux_.J.at(f));
      break;
  }
  auto g = std::make_unique<LocalGeometry>(fac.metric, ExactInverse{}, spec, M.project(p, f));
  return *geoms_.emplace(key, std::move(g)).first->second;
}

double Ctx::structure(FactorTag f, int r, int c) const {
  auto it = j_values_.find(f);
  if (it == j_values_.end()) {
    const auto& Jf = aux_.J.at(f);
    const Point q = M.project(p, f);
    const int d = M.factor(f).dim();
    std::vector<double> m(d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) m[a * d + b] = eval_value(Jf.matrix[a][b], q);
    it = j_values_.emplace(f, std::move(m)).first;
  }
  return it->second[r * M.factor(f).dim() + c];
}

// ------------------------------------------------------------ vocabulary

namespace dsl {

namespace {

FactorTag same_factor(std::initializer_list<A> as) {
  const Ctx& c = ctx();
  FactorTag f = -1;
  for (A a : as) {
    const FactorTag t = c.factor_of(a);
    if (f >= 0 && t != f) throw std::logic_error("factor form applied across factors");
    f = t;
  }
  return f;
}

double koszul_of(ConnectionKind k, A a, A b_, A d) {
  const Ctx& c = ctx();
  const FactorTag f = same_factor({a, b_, d});
  const auto& lg = c.geometry(f, k);
  return lg.koszul(c.local_jet(a), c.local_jet(b_), c.local_jet(d));
}

double curvature_of(ConnectionKind k, A a, A b_, A d, A e) {
  const Ctx& c = ctx();
  const FactorTag f = same_factor({a, b_, d, e});
  const auto& lg = c.geometry(f, k);
  return lg.curvature(c.local_jet(a), c.local_jet(b_), c.local_jet(d), c.local_jet(e));
}

std::vector<double> resolve(const Cov& w, FactorTag f) {
  const Ctx& c = ctx();
  const Factor& fac = c.M.factor(f);
  const int d = fac.dim();
  switch (w.kind) {
    case Cov::Flat:
    case Cov::FlatA: {
      if (same_factor({w.a, w.c}) != f) throw std::logic_error("covector lives on another factor");
      const auto k = w.kind == Cov::Flat ? ConnectionKind::Plain : ConnectionKind::AlmostProduct;
      return c.geometry(f, k).flat(c.local_jet(w.a), c.local_jet(w.c));
    }
    case Cov::Db:
    case Cov::DbJ: {
      const Jet2& bj = c.warping_jet(w.j);
      std::vector<double> v(d);
      for (int a = 0; a < d; ++a) v[a] = bj.grad(fac.begin + a);
      if (w.kind == Cov::Db) return v;
      std::vector<double> r(d, 0.0);
      for (int a = 0; a < d; ++a)
        for (int e = 0; e < d; ++e) r[a] += v[e] * c.structure(f, e, a);
      return r;
    }
  }
  return {};
}

}  // namespace

double b(int j) { return ctx().warping_jet(j).value; }

double Xb(A a, int j) {
  const Ctx& c = ctx();
  return deriv(c.product_jet(a), c.warping_jet(j)).value;
}

double XYb(A a, A d, int j) {
  const Ctx& c = ctx();
  return deriv(c.product_jet(a), deriv(c.product_jet(d), c.warping_jet(j))).value;
}

double g(A a, A d) {
  const Ctx& c = ctx();
  const FactorTag f = c.factor_of(a);
  if (c.factor_of(d) != f) return 0.0;
  return c.geometry(f, ConnectionKind::Plain).g(c.local_jet(a), c.local_jet(d));
}

double Dg(A a, A d, A e) {
  const Ctx& c = ctx();
  const FactorTag f = c.factor_of(a);
  if (c.factor_of(d) != f || c.factor_of(e) != f) return 0.0;
  const auto& lg = c.geometry(f, ConnectionKind::Plain);
  return deriv(c.local_jet(a), pair(lg.metric(), c.local_jet(d), c.local_jet(e))).value;
}

double K(A a, A c, A d) { return koszul_of(ConnectionKind::Plain, a, c, d); }
double KS(A a, A c, A d) { return koszul_of(ConnectionKind::SemiSymMetric, a, c, d); }
double KN(A a, A c, A d) { return koszul_of(ConnectionKind::SemiSymNonMetric, a, c, d); }
double KA(A a, A c, A d) { return koszul_of(ConnectionKind::AlmostProduct, a, c, d); }
double R(A a, A c, A d, A e) { return curvature_of(ConnectionKind::Plain, a, c, d, e); }
double RS(A a, A c, A d, A e) { return curvature_of(ConnectionKind::SemiSymMetric, a, c, d, e); }
double RN(A a, A c, A d, A e) { return curvature_of(ConnectionKind::SemiSymNonMetric, a, c, d, e); }
double RA(A a, A c, A d, A e) { return curvature_of(ConnectionKind::AlmostProduct, a, c, d, e); }

double gs(FactorTag f, const Cov& w, const Cov& e) {
  const Ctx& c = ctx();
  return c.geometry(f, ConnectionKind::Plain).gstar(resolve(w, f), resolve(e, f));
}

}  // namespace dsl

// ------------------------------------------------------------ tables

Pattern parse_pattern(const std::string& text) {
  Pattern pat;
  pat.text = text;
  std::string s = text;
  if (!s.empty() && s[0] == '-') {
    pat.sign = -1.0;
    s = s.substr(1);
  }
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) throw std::logic_error("empty slot in pattern '" + text + "'");
    Slot sl;
    sl.name = tok[0];
    if (tok.size() == 3 && tok[1] == '_') sl.index = tok[2];
    else if (tok.size() != 1) throw std::logic_error("bad slot '" + tok + "' in '" + text + "'");
    if (sl.base() && sl.index) throw std::logic_error("base slot with fiber index in '" + text + "'");
    pat.slots.push_back(sl);
  }
  return pat;
}

Item item(std::string ordinal, std::vector<std::string> patterns, std::string condition, Formula f,
          std::string note) {
  Item it;
  it.ordinal = std::move(ordinal);
  for (const auto& p : patterns) it.patterns.push_back(parse_pattern(p));
  it.condition = std::move(condition);
  it.formula = f;
  it.note = std::move(note);
  return it;
}

Item zero(std::string ordinal, std::vector<std::string> patterns, std::string condition) {
  return item(std::move(ordinal), std::move(patterns), std::move(condition), nullptr);
}

Item amend(Item it, Formula f, std::string what) {
  it.amended = f;
  it.amendment = std::move(what);
  return it;
}

Item other(std::string ordinal, std::vector<std::string> patterns) {
  Item it = zero(std::move(ordinal), std::move(patterns));
  it.other_cases = true;
  return it;
}

const std::vector<Row>& rows() {
  static const std::vector<Row> all = [] {
    std::vector<Row> r = warped_rows();
    for (auto& x : twisted_rows()) r.push_back(std::move(x));
    for (auto& x : contraction_rows()) r.push_back(std::move(x));
    return r;
  }();
  return all;
}

const std::vector<Row>& fixture_rows() {
  static const std::vector<Row> all = special_rows();
  return all;
}

const Row* find_row(ConnectionKind c, ObjectKind o, ProductKind pk, PLocation::Kind ploc) {
  for (const auto& r : rows())
    if (r.connection == c && r.object == o && r.product == pk && r.ploc == ploc) return &r;
  return nullptr;
}

int item_count() {
  int n = 0;
  for (const auto& r : rows()) n += static_cast<int>(r.items.size());
  return n;
}

std::optional<Binding> bind_pattern(const Pattern& pat, const std::vector<FactorTag>& tags, int l) {
  if (pat.slots.size() != tags.size()) return std::nullopt;
  Binding bind;
  if (l > 0) bind['l'] = l;
  for (size_t a = 0; a < tags.size(); ++a) {
    const Slot& sl = pat.slots[a];
    if (sl.base() != (tags[a] == kBase)) return std::nullopt;
    if (!sl.index) {
      if (!sl.base() && tags[a] != 1) return std::nullopt;
      continue;
    }
    auto it = bind.find(sl.index);
    if (it == bind.end()) bind[sl.index] = tags[a];
    else if (it->second != tags[a]) return std::nullopt;
  }
  return bind;
}

bool condition_holds(const std::string& condition, const Binding& bind) {
  if (condition.empty()) return true;
  auto value = [&](char c) {
    auto it = bind.find(c);
    if (it == bind.end()) throw std::logic_error(std::string("condition letter ") + c + " unbound");
    return it->second;
  };
  std::stringstream alts(condition);
  std::string alt;
  while (std::getline(alts, alt, '|')) {
    std::vector<int> reps;
    bool ok = true;
    size_t pos = 0;
    while (ok && pos <= alt.size()) {
      size_t next = alt.find("!=", pos);
      const std::string group = alt.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      int rep = -1;
      for (char c : group) {
        if (c == '=' || c == ' ') continue;
        const int v = value(c);
        if (rep < 0) rep = v;
        else if (v != rep) ok = false;
      }
      if (rep >= 0) reps.push_back(rep);
      if (next == std::string::npos) break;
      pos = next + 2;
    }
    for (size_t a = 0; ok && a < reps.size(); ++a)
      for (size_t b = a + 1; ok && b < reps.size(); ++b)
        if (reps[a] == reps[b]) ok = false;
    if (ok) return true;
  }
  return false;
}

std::optional<Match> dispatch(const Row& row, const std::vector<FactorTag>& tags, int l) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& it : row.items) {
      if (it.other_cases != (pass == 1)) continue;
      for (int pi = 0; pi < static_cast<int>(it.patterns.size()); ++pi) {
        auto bind = bind_pattern(it.patterns[pi], tags, l);
        if (bind && condition_holds(it.condition, *bind)) return Match{&it, pi, *bind};
      }
    }
  return std::nullopt;
}

double evaluate(const Row& row, const Item& item, int pattern, const Binding& bind,
                const ProductManifold& M, const std::vector<LiftedField>& args,
                const CatalogAux& aux, const Point& p, bool use_amended) {
  const Pattern& pat = item.patterns.at(pattern);
  if (args.size() != pat.slots.size()) throw CaseMismatch("argument count differs from the pattern");
  const Formula f = use_amended && item.amended ? item.amended : item.formula;
  if (!f) return 0.0;
  std::map<char, const LiftedField*> named;
  for (size_t a = 0; a < args.size(); ++a) named[pat.slots[a].name] = &args[a];
  // fixture formulas use d/dt even when no slot holds it
  std::optional<LiftedField> dt;
  if (!row.fixture.empty() && !named.count('T')) {
    dt = M.lift(VectorField::coordinate(M.factor(kBase).chart, 0), kBase);
    named['T'] = &*dt;
  }
  const Ctx c(M, p, aux, bind, std::move(named));
  const CtxScope scope(c);
  return pat.sign * f();
}

}  // namespace catalog

ClosedForm closed_form(const CatalogKey& key, const ProductManifold& M,
                       const std::vector<LiftedField>& args, const CatalogAux& aux, const Point& p) {
  const size_t arity = key.object == ObjectKind::KoszulForm ? 3 : 4;
  if (key.arg_tags.size() != arity || args.size() != arity)
    throw CaseMismatch("arity " + std::to_string(args.size()) + " does not fit a " +
                       to_string(key.object) + " key");
  if (key.product != M.kind) throw CaseMismatch("key names a different product kind");
  for (size_t a = 0; a < arity; ++a) {
    if (args[a].tag != key.arg_tags[a])
      throw CaseMismatch("argument " + std::to_string(a + 1) + " carries a different factor tag");
    if (args[a].tag < 0 || args[a].tag > M.fiber_count())
      throw CaseMismatch("argument tag outside the product");
    const auto& comps = args[a].field.components;
    for (size_t i = 0; i < comps.size(); ++i)
      if (M.factor_map[i] != args[a].tag && !comps[i].is_zero())
        throw CaseMismatch("argument " + std::to_string(a + 1) + " is not a pure lift; split it by factor");
  }
  const bool needs_p = key.connection == ConnectionKind::SemiSymMetric ||
                       key.connection == ConnectionKind::SemiSymNonMetric;
  if (needs_p) {
    if (!aux.P || key.p.kind == PLocation::Kind::None)
      throw CaseMismatch("semi-symmetric key without P");
    const FactorTag want = key.p.kind == PLocation::Kind::Base ? kBase : key.p.fiber;
    if (aux.P->tag != want) throw CaseMismatch("P does not lie in the factor named by the key");
  } else if (key.p.kind != PLocation::Kind::None) {
    throw CaseMismatch("P location given for a connection without P");
  }
  if (key.connection == ConnectionKind::AlmostProduct && aux.J.size() != M.factors.size())
    throw CaseMismatch("almost product key needs one J per factor");
  M.chart->check_point(p);

  const catalog::Row* row = catalog::find_row(key.connection, key.object, key.product, key.p.kind);
  if (!row) return {};
  const int l = key.p.kind == PLocation::Kind::Fiber ? key.p.fiber : 0;
  auto m = catalog::dispatch(*row, key.arg_tags, l);
  if (!m) return {};
  ClosedForm out;
  out.covered = true;
  out.item = row->label(*m->item);
  out.value = catalog::evaluate(*row, *m->item, m->pattern, m->bind, M, args, aux, p);
  return out;
}

}  // namespace kg
