#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/catalog_check.hpp"
#include "koszul/fixtures.hpp"

namespace kg {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int n = 20;  // instances per catalog or fixture item
  Tolerance tol;
  int identity_n = 500;
  int curvature_n = 300;
  int christoffel_n = 100;
  /// Fixture parameters; missing names use the fixture defaults.
  std::vector<std::pair<std::string, FixtureParams>> fixture_params;
  /// Twistings for the degenerate-limit probe, in t (base) and u, v (fiber).
  std::string limit_hypothesis = "t^2*(1+u^2)/4";
  std::string limit_counterexample = "t*(1+u^2)/2";
};

/// One compared quantity.  `reference` is the oracle or the identity's
/// right-hand side.
struct CaseRecord {
  std::string suite;
  std::string check;  // identity name or verbatim item label
  std::string key;    // catalog key, or the instance shape
  std::string pattern;
  std::uint64_t seed = 0;
  double reference = 0.0;
  double value = 0.0;
  Comparison cmp;
  // fixtures: general table value
  bool has_general = false;
  double general = 0.0;
  std::string general_item;
  Comparison general_cmp;
  // items with a corrected reading
  bool has_amended = false;
  double amended = 0.0;
  Comparison amended_cmp;
  std::string amendment;

  bool pass() const { return cmp.pass && (!has_general || general_cmp.pass); }
};

/// An item or identity with at least one failing case.
struct Finding {
  std::string suite;
  std::string check;
  int cases = 0;
  int failures = 0;
  double worst_rel = 0.0;
  double worst_abs = 0.0;
  std::string example_key;
  std::string example_pattern;
  std::uint64_t example_seed = 0;
  std::string amendment;     // empty when the item carries none
  bool amended_passes = false;
  bool general_fails = false;  // fixtures: the general table fails as well
};

/// Degenerate-limit probe along points where b = 10^-k.
struct LimitProbe {
  std::string twisting;
  bool hypothesis = false;   // db vanishes on {b = 0}
  bool skipped = false;
  std::string reason;
  std::vector<double> b_values;
  struct Series {
    std::string item;
    std::string pattern;
    std::vector<double> catalog;
    std::vector<double> oracle;
    double bound = 0.0;       // max |value|
    double cauchy = 0.0;      // max pairwise gap over the last three points
    bool converges = false;
  };
  std::vector<Series> series;
  bool converges() const;
};

struct SuiteSummary {
  std::string name;
  int cases = 0;
  int failures = 0;
  bool pass = true;
  std::vector<std::string> notes;
  double seconds = 0.0;  // excluded from the report body
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<SuiteSummary> suites;
  std::vector<CaseRecord> records;
  std::vector<Finding> findings;
  std::vector<LimitProbe> probes;
  double seconds = 0.0;

  bool pass() const;
  const SuiteSummary* suite(const std::string& name) const;
};

/// Suite names: identities, curvature, christoffel, catalog, contraction,
/// fixtures, degenerate-limit; "all" runs every one.
const std::vector<std::string>& suite_names();

/// Throws SpecError on an unknown suite name.
VerifyReport run_verify(const std::vector<std::string>& suites, const VerifyOptions& opts);

std::vector<CaseRecord> identity_suite(const VerifyOptions& opts, std::vector<std::string>* notes = nullptr);
std::vector<CaseRecord> curvature_suite(const VerifyOptions& opts, std::vector<std::string>* notes = nullptr);
std::vector<CaseRecord> christoffel_suite(const VerifyOptions& opts);
/// Catalog rows; contraction rows come back under suite "contraction".
std::vector<CaseRecord> catalog_suite(const VerifyOptions& opts, bool contractions);
std::vector<CaseRecord> fixture_suite(const VerifyOptions& opts, const std::vector<std::string>& names);
/// The two pinned values on M1: K-hat(dt,dt,dt) = 1 with P = dt, and
/// R-bar(dt,V,W,dt) = -0.25 g_F(V,W) for b = t^2 at t = 0.5.
std::vector<CaseRecord> fixture_spot_checks(const VerifyOptions& opts);

/// Fiber coordinates are named by `fiber_coords` (two of them).  With
/// `require_hypothesis` the probe is skipped when db does not vanish on {b = 0}.
LimitProbe degenerate_limit_probe(const std::string& twisting, std::uint64_t seed,
                                  const std::vector<std::string>& fiber_coords = {"u", "v"},
                                  bool require_hypothesis = false);

std::vector<Finding> collect_findings(const std::vector<CaseRecord>& records);

/// JSON report.  The body leaves out wall-clock times; the full document adds
/// them under "timing" together with a hash of the body.
std::string report_body(const VerifyReport& r);
std::string report_json(const VerifyReport& r);
std::string report_csv(const VerifyReport& r);
std::string body_hash(const std::string& body);

}  // namespace kg
