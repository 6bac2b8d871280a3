// acceptance: one PASS/FAIL line per criterion
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "koszul/verify.hpp"

using namespace kg;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void verdict(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void detail(const std::string& s) { std::printf("    %s\n", s.c_str()); }

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

struct Tally {
  int cases = 0, failed = 0;
  double worst = 0.0;
  std::map<std::string, std::pair<int, int>> per_check;  // cases, failures
};

Tally tally(const std::vector<CaseRecord>& recs) {
  Tally t;
  for (const auto& r : recs) {
    ++t.cases;
    auto& pc = t.per_check[r.check];
    ++pc.first;
    if (!r.pass()) {
      ++t.failed;
      ++pc.second;
    }
    t.worst = std::max(t.worst, r.cmp.abs_err);
  }
  return t;
}

void list_failures(const Tally& t) {
  for (const auto& [name, c] : t.per_check)
    if (c.second) detail("finding: " + name + fmt(" fails %g of %g cases", c.second, c.first));
}

}  // namespace

int main() {
  VerifyOptions opts;

  // 1. Koszul identities
  {
    const auto t0 = Clock::now();
    const auto recs = identity_suite(opts);
    const double s = since(t0);
    const Tally t = tally(recs);
    bool enough = true;
    for (const auto& [_, c] : t.per_check) enough = enough && c.first >= 500;
    verdict(1, t.failed == 0 && enough && t.per_check.size() == 8 && s < 10.0,
            "Koszul identities, " + std::to_string(t.per_check.size()) + " identities x 500 instances, dims 2-4, " +
                fmt("worst |err| %.2e < 1e-9, %.2f s < 10 s", t.worst, s));
    list_failures(t);
  }

  // 2. curvature symmetries and reductions
  {
    const auto t0 = Clock::now();
    std::vector<std::string> notes;
    const auto recs = curvature_suite(opts, &notes);
    const double s = since(t0);
    const Tally t = tally(recs);
    bool enough = true;
    for (const auto& [_, c] : t.per_check) enough = enough && c.first >= 300;
    verdict(2, t.failed == 0 && enough && s < 20.0,
            std::to_string(t.per_check.size()) + " symmetry and reduction checks x 300 instances, " +
                fmt("worst |err| %.2e, %.2f s < 20 s", t.worst, s));
    list_failures(t);
    for (const auto& n : notes) detail(n);
  }

  // 3. second oracle
  {
    const auto recs = christoffel_suite(opts);
    const Tally t = tally(recs);
    double worst_rel = 0.0;
    for (const auto& r : recs) worst_rel = std::max(worst_rel, r.cmp.abs_err <= opts.tol.abs ? 0.0 : r.cmp.rel_err);
    verdict(3, t.failed == 0 && t.cases >= 100,
            "riemann vs Christoffel curvature on " + std::to_string(t.cases) + " metrics, dims 2-3, " +
                fmt("worst rel err %.2e < 1e-8", worst_rel));
  }

  // 4. catalog vs oracle
  {
    const auto t0 = Clock::now();
    const auto recs = catalog_suite(opts, false);
    const double s = since(t0);
    const Tally t = tally(recs);
    int min_n = 1 << 30;
    for (const auto& [_, c] : t.per_check) min_n = std::min(min_n, c.first);
    verdict(4, t.failed == 0 && min_n >= 20 && s < 60.0,
            std::to_string(t.per_check.size()) + " catalog items, >= " + std::to_string(min_n) +
                " instances each, rel 1e-8 / abs 1e-10, " +
                fmt("%g failing cases, %.2f s < 60 s", t.failed, s));
    for (const auto& f : collect_findings(recs)) {
      std::string line = "finding: " + f.check + fmt(" fails %g of %g cases", f.failures, f.cases) +
                         " (example " + f.example_key + ")";
      if (!f.amendment.empty()) line += "; amended reading " + std::string(f.amended_passes ? "passes" : "fails");
      detail(line);
    }
    const auto contr = catalog_suite(opts, true);
    const Tally c = tally(contr);
    detail("contraction rows, reported separately: " + fmt("%g cases, %g failing", c.cases, c.failed));
  }

  // 5. fixtures
  {
    std::vector<std::string> names;
    for (const auto& f : fixtures()) names.push_back(f.name);
    const auto recs = fixture_suite(opts, names);
    const auto spots = fixture_spot_checks(opts);
    const Tally t = tally(recs), sp = tally(spots);
    verdict(5, t.failed == 0 && sp.failed == 0,
            "fixtures M1-M4, printed vs general vs oracle, " + fmt("%g cases, %g failing", t.cases, t.failed) +
                fmt("; pinned values %g/%g hold", sp.cases - sp.failed, sp.cases));
    for (const auto& r : spots)
      detail(r.check + fmt(": %.17g (want %.17g)", r.value, r.reference));
    for (const auto& f : collect_findings(recs)) {
      std::string line = "finding: " + f.check + fmt(" fails %g of %g cases", f.failures, f.cases);
      if (f.general_fails) line += "; the general table fails as well";
      if (!f.amendment.empty()) line += "; amended reading " + std::string(f.amended_passes ? "passes" : "fails");
      detail(line);
    }
  }

  // 6. degenerate limit
  {
    const LimitProbe h = degenerate_limit_probe(opts.limit_hypothesis, opts.seed);
    const LimitProbe c = degenerate_limit_probe(opts.limit_counterexample, opts.seed);
    const bool hyp = !h.skipped && h.hypothesis && h.converges();
    const bool div = !c.skipped && !c.hypothesis && !c.converges();
    verdict(6, hyp && div,
            "b = " + h.twisting + std::string(hyp ? " bounded and Cauchy" : " not convergent") + "; b = " +
                c.twisting + std::string(div ? " diverges" : " records no divergence"));
    for (const auto* p : {&h, &c})
      for (const auto& s : p->series)
        detail(p->twisting + " " + s.item + fmt(": bound %.3e, Cauchy gap %.3e", s.bound, s.cauchy));
  }

  // 7. determinism
  {
    const VerifyReport a = run_verify({"all"}, opts);
    const VerifyReport b = run_verify({"all"}, opts);
    const std::string ba = report_body(a), bb = report_body(b);
    verdict(7, ba == bb && report_csv(a) == report_csv(b),
            "two full verify runs give byte-identical report bodies (" + body_hash(ba) + ", " +
                std::to_string(ba.size()) + " bytes)");
  }

  return failures == 0 ? 0 : 1;
}
