#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/catalog_check.hpp"

namespace kg {

/// Parameters of a named space-time.  M1 and M4 read `b`; M2 and M3 read
/// `phi` and one exponent per fiber.
struct FixtureParams {
  std::string b;
  std::string phi;
  std::vector<double> p;
};

struct FixtureInfo {
  std::string name;
  std::string description;
  ProductKind product = ProductKind::MultiplyWarped;
  std::vector<int> fiber_dims;
  Interval t_range;       // chart interval of t
  Interval t_sample;      // where points are drawn
  FixtureParams defaults;
};

const std::vector<FixtureInfo>& fixtures();
/// Throws UnknownFixture.
const FixtureInfo& fixture(const std::string& name);

/// Warping expressions b_j in the coordinates of the fixture (t, fiber coordinates).
std::vector<std::string> fixture_warpings(const FixtureInfo& fx, const FixtureParams& params);

/// The t chart, metric -dt^2.
ChartPtr fixture_base_chart(const FixtureInfo& fx);
/// The fixture product over the given fiber data (dimensions must match).
ProductManifold build_fixture(const FixtureInfo& fx, const FixtureParams& params, const ChartPtr& base,
                              const std::vector<FactorData>& fibers);

/// A fixture product with random fiber metrics and fields for one item pattern.
/// Base slots are d/dt; P = d/dt for base rows.
CatalogInstance draw_fixture(const FixtureInfo& fx, const FixtureParams& params,
                             const catalog::Row& row, const catalog::Pattern& pat,
                             const catalog::Binding& bind, std::uint64_t seed);

struct FixtureRecord {
  std::string fixture;
  std::string item;
  std::string pattern;
  std::string key;
  std::uint64_t seed = 0;
  double oracle = 0.0;
  double printed = 0.0;  // the fixture's own formula
  bool covered = false;  // the general table has an item for the key
  double general = 0.0;
  std::string general_item;
  Comparison printed_cmp;  // printed vs oracle
  Comparison general_cmp;  // general vs oracle
  bool has_amended = false;
  double amended = 0.0;
  Comparison amended_cmp;
  bool pass() const { return printed_cmp.pass && (!covered || general_cmp.pass); }
};

std::vector<FixtureRecord> check_fixture(const std::string& name, const FixtureParams& params,
                                         std::uint64_t seed, int n, const Tolerance& tol);

/// Rows of one fixture.
std::vector<const catalog::Row*> fixture_rows_of(const std::string& name);

}  // namespace kg
