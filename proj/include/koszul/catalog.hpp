#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/connections.hpp"
#include "koszul/products.hpp"

namespace kg {

enum class ObjectKind { KoszulForm, Curvature, Contraction };

const char* to_string(ObjectKind k);

struct PLocation {
  enum class Kind { None, Base, Fiber };
  Kind kind = Kind::None;
  int fiber = 0;  // l, for Kind::Fiber

  static PLocation none() { return {}; }
  static PLocation base() { return {Kind::Base, 0}; }
  static PLocation in_fiber(int l) { return {Kind::Fiber, l}; }
};

std::string to_string(const PLocation& p);

struct CatalogKey {
  ConnectionKind connection = ConnectionKind::Plain;
  ObjectKind object = ObjectKind::KoszulForm;
  ProductKind product = ProductKind::MultiplyWarped;
  PLocation p;
  std::vector<FactorTag> arg_tags;
};

std::string to_string(const CatalogKey& key);

/// Auxiliary connection data: P as a lifted field, or one J per factor on
/// the factor charts.
struct CatalogAux {
  std::optional<LiftedField> P;
  std::vector<ProductStructure> J;
};

struct ClosedForm {
  bool covered = false;
  double value = 0.0;
  std::string item;  // "<row id> (<ordinal>)"
};

/// Evaluates the single theorem item selected by the key.  Shapes listed by
/// no item come back with covered = false.
ClosedForm closed_form(const CatalogKey& key, const ProductManifold& M,
                       const std::vector<LiftedField>& args, const CatalogAux& aux, const Point& p);

namespace catalog {

/// One argument slot: a letter (X,Y,Z,T on the base; U,V,W,Q on fibers)
/// and an optional fiber index letter.
struct Slot {
  char name = 0;
  char index = 0;
  bool base() const;
};

struct Pattern {
  std::vector<Slot> slots;
  double sign = 1.0;
  std::string text;
};

using Formula = double (*)();

struct Item {
  std::string ordinal;
  std::vector<Pattern> patterns;
  std::string condition;  // "i=j!=k|..." ; empty means always
  Formula formula = nullptr;  // nullptr means identically zero
  bool other_cases = false;
  std::string note;
  // Corrected reading for a printed formula that disagrees with the definitions.
  Formula amended = nullptr;
  std::string amendment;
};

struct Row {
  std::string id;
  ConnectionKind connection = ConnectionKind::Plain;
  ObjectKind object = ObjectKind::KoszulForm;
  ProductKind product = ProductKind::MultiplyWarped;
  PLocation::Kind ploc = PLocation::Kind::None;
  std::string fixture;  // non-empty for fixture rows; base slots then mean d/dt
  std::vector<Item> items;

  std::string label(const Item& item) const { return id + " (" + item.ordinal + ")"; }
};

/// Rows of the general dispatch table.
const std::vector<Row>& rows();
/// Rows stated for the named special space-times.
const std::vector<Row>& fixture_rows();

const Row* find_row(ConnectionKind c, ObjectKind o, ProductKind pk, PLocation::Kind ploc);

using Binding = std::map<char, int>;

struct Match {
  const Item* item = nullptr;
  int pattern = -1;
  Binding bind;
};

/// Binds a pattern against argument tags; fails on a shape or index clash.
std::optional<Binding> bind_pattern(const Pattern& pat, const std::vector<FactorTag>& tags, int l);
bool condition_holds(const std::string& condition, const Binding& bind);
/// First item whose pattern and condition accept the tags ("other cases" last).
std::optional<Match> dispatch(const Row& row, const std::vector<FactorTag>& tags, int l);

/// Evaluates one item pattern with arguments given in slot order.
double evaluate(const Row& row, const Item& item, int pattern, const Binding& bind,
                const ProductManifold& M, const std::vector<LiftedField>& args,
                const CatalogAux& aux, const Point& p, bool use_amended = false);

int item_count();

}  // namespace catalog
}  // namespace kg
