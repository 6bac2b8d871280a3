#pragma once

// Vocabulary for transcribing theorem items.  Formulas are captureless
// lambdas evaluated against a thread-local context set by the evaluator.

#include <map>
#include <memory>
#include <vector>

#include "koszul/catalog.hpp"
#include "koszul/curvature.hpp"

namespace kg::catalog {

struct A {
  char name = 0;
  bool j = false;  // J applied
};

class Ctx {
 public:
  Ctx(const ProductManifold& M, const Point& p, const CatalogAux& aux, const Binding& bind,
      std::map<char, const LiftedField*> args);

  int ix(char c) const;
  FactorTag factor_of(A a) const;
  /// Product-chart jet of an argument (J applied on its factor when asked).
  const JetVec& product_jet(A a) const;
  /// Factor-chart jet at the projected point.
  const JetVec& local_jet(A a) const;
  const Jet2& warping_jet(int j) const;
  const LocalGeometry& geometry(FactorTag f, ConnectionKind k) const;
  double structure(FactorTag f, int r, int c) const;

  const ProductManifold& M;
  const Point& p;

 private:
  const LiftedField& lifted(A a) const;

  const CatalogAux& aux_;
  const Binding& bind_;
  std::map<char, const LiftedField*> args_;
  mutable std::map<std::pair<char, bool>, LiftedField> j_fields_;
  mutable std::map<std::pair<char, bool>, JetVec> prod_jets_;
  mutable std::map<std::pair<char, bool>, JetVec> local_jets_;
  mutable std::map<int, Jet2> b_jets_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<LocalGeometry>> geoms_;
  mutable std::map<int, std::vector<double>> j_values_;
};

const Ctx& ctx();

class CtxScope {
 public:
  explicit CtxScope(const Ctx& c);
  ~CtxScope();
  CtxScope(const CtxScope&) = delete;
  CtxScope& operator=(const CtxScope&) = delete;

 private:
  const Ctx* prev_;
};

namespace dsl {

inline constexpr A X{'X'}, Y{'Y'}, Z{'Z'}, T{'T'};
inline constexpr A U{'U'}, V{'V'}, W{'W'}, Q{'Q'};
inline constexpr A P{'P'};

inline A J(A a) { return {a.name, !a.j}; }

/// Warping b_j at the point (twisted products: j = 1).
double b(int j = 1);
/// a(b_j) and a(c(b_j)).
double Xb(A a, int j = 1);
double XYb(A a, A c, int j = 1);
/// Metric of the factor of `a`; zero across different factors.
double g(A a, A c);
/// a(g(c, d)) on the factor of a.
double Dg(A a, A c, A d);

// Factor Koszul forms and curvatures: plain, semi-symmetric metric,
// semi-symmetric non-metric, almost product.
double K(A a, A c, A d);
double KS(A a, A c, A d);
double KN(A a, A c, A d);
double KA(A a, A c, A d);
double R(A a, A c, A d, A e);
double RS(A a, A c, A d, A e);
double RN(A a, A c, A d, A e);
double RA(A a, A c, A d, A e);

struct Cov {
  enum Kind { Flat, FlatA, Db, DbJ } kind = Flat;
  A a, c;
  int j = 1;
};
inline Cov flat(A a, A c) { return {Cov::Flat, a, c, 0}; }
inline Cov flatA(A a, A c) { return {Cov::FlatA, a, c, 0}; }
inline Cov db(int j = 1) { return {Cov::Db, {}, {}, j}; }
inline Cov dbJ(int j = 1) { return {Cov::DbJ, {}, {}, j}; }

/// Contraction of two 1-forms with the inverse metric of a factor.
double gs(FactorTag f, const Cov& w, const Cov& e);
inline double gsB(const Cov& w, const Cov& e) { return gs(kBase, w, e); }
inline double gsF(const Cov& w, const Cov& e) { return gs(1, w, e); }

inline double sq(double x) { return x * x; }

}  // namespace dsl

// Item builders used by the row tables.
Pattern parse_pattern(const std::string& text);
Item item(std::string ordinal, std::vector<std::string> patterns, std::string condition,
          Formula f, std::string note = {});
Item zero(std::string ordinal, std::vector<std::string> patterns, std::string condition = {});
Item other(std::string ordinal, std::vector<std::string> patterns);
Item amend(Item it, Formula f, std::string what);

std::vector<Row> warped_rows();
std::vector<Row> twisted_rows();
std::vector<Row> contraction_rows();
std::vector<Row> special_rows();

}  // namespace kg::catalog

// Formula body with the index letters i, j, k, s, l in scope (-1 if unbound).
#define KG_FB(...)                                                \
  []() -> double {                                                \
    using namespace ::kg::catalog::dsl;                           \
    [[maybe_unused]] const int i = ::kg::catalog::ctx().ix('i');  \
    [[maybe_unused]] const int j = ::kg::catalog::ctx().ix('j');  \
    [[maybe_unused]] const int k = ::kg::catalog::ctx().ix('k');  \
    [[maybe_unused]] const int s = ::kg::catalog::ctx().ix('s');  \
    [[maybe_unused]] const int l = ::kg::catalog::ctx().ix('l');  \
    __VA_ARGS__                                                   \
  }
#define KG_F(...) KG_FB(return (__VA_ARGS__);)
