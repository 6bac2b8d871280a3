#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/catalog.hpp"

namespace kg {

struct Tolerance {
  double rel = 1e-8;
  double abs = 1e-10;
};

/// Absolute and relative error of `value` against `reference`; passes when
/// either the absolute error is under the floor or the relative one is.
struct Comparison {
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};
Comparison compare(double reference, double value, const Tolerance& tol);

struct CheckRecord {
  std::string key;
  std::string item;
  std::string pattern;
  std::uint64_t seed = 0;
  double oracle = 0.0;
  double catalog = 0.0;
  Comparison cmp;
  // Set when the item carries an amended reading.
  bool has_amended = false;
  double amended = 0.0;
  Comparison amended_cmp;
};

/// One randomly drawn product plus lifted arguments for a catalog pattern.
struct CatalogInstance {
  ProductManifold M;
  CatalogKey key;
  std::vector<LiftedField> args;
  CatalogAux aux;
  Point p;
};

/// Fiber count used for multiply warped instances.
inline constexpr int kCheckFibers = 3;

CatalogInstance draw_instance(const catalog::Row& row, const catalog::Pattern& pat,
                              const catalog::Binding& bind, std::uint64_t seed);

/// Value of the object named by the instance key, from the definitions on
/// the whole product.
double oracle_value(const catalog::Row& row, const CatalogInstance& inst);

/// Every (pattern, index assignment) the item is responsible for, with
/// indices running over `fibers` fibers (0: the default instance shape).
std::vector<std::pair<int, catalog::Binding>> item_cases(const catalog::Row& row,
                                                         const catalog::Item& item, int fibers = 0);

std::vector<CheckRecord> check_item(const catalog::Row& row, const catalog::Item& item,
                                    std::uint64_t seed, int n, const Tolerance& tol);

std::vector<CheckRecord> check_catalog(std::uint64_t seed, int n, const Tolerance& tol);

std::uint64_t label_hash(const std::string& s);

}  // namespace kg
