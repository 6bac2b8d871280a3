// koszul: eval / verify / fixtures
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "koszul/errors.hpp"
#include "koszul/spec_file.hpp"
#include "koszul/verify.hpp"

using namespace kg;

namespace {

int exit_code(const Error& e) {
  const std::string& k = e.kind();
  if (k == "DomainError" || k == "SingularMetric" || k == "RankDeficiencyAmbiguous") return 3;
  return 2;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError("cannot write '" + path + "'");
  out << text;
}

void print_summary(const VerifyReport& rep) {
  for (const auto& s : rep.suites) {
    std::printf("%-17s %6d cases %5d failing  %s\n", s.name.c_str(), s.cases, s.failures, s.pass ? "PASS" : "FAIL");
    for (const auto& n : s.notes) std::printf("    %s\n", n.c_str());
  }
  for (const auto& f : rep.findings) {
    std::printf("  finding: %s | %s  %d/%d failing, worst rel %.3g", f.suite.c_str(), f.check.c_str(), f.failures,
                f.cases, f.worst_rel);
    if (!f.amendment.empty()) std::printf("  [amended reading %s]", f.amended_passes ? "passes" : "fails");
    std::printf("\n");
  }
  for (const auto& p : rep.probes) {
    if (p.skipped) std::printf("  degenerate-limit %s: skipped (%s)\n", p.twisting.c_str(), p.reason.c_str());
    else
      std::printf("  degenerate-limit %s: db|b=0 %s, %s\n", p.twisting.c_str(),
                  p.hypothesis ? "vanishes" : "does not vanish", p.converges() ? "converges" : "diverges");
  }
  std::printf("%s\n", rep.pass() ? "PASS" : "FAIL");
}

void emit(const VerifyReport& rep, const std::string& out, const std::string& csv) {
  if (!out.empty()) write_file(out, report_json(rep));
  if (!csv.empty()) write_file(csv, report_csv(rep));
  print_summary(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul forms and curvature of warped and twisted products"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one Koszul form or curvature value");
  std::string spec_path;
  EvalRequest req;
  std::string args_text, J_text;
  eval->add_option("spec", spec_path, "manifold spec file (JSON)")->required();
  eval->add_option("--on", req.on, "metric, product or fixture name")->required();
  eval->add_option("--object", req.object,
                   "koszul|ssm-koszul|ssnm-koszul|ap-koszul|riemann|ssm-curvature|ssnm-curvature|ap-curvature|"
                   "contraction (or K, Kbar, Khat, Ktilde, R, Rbar, Rhat, Rtilde)")
      ->required();
  eval->add_option("--args", args_text, "comma separated field names; d<coord> are coordinate fields")->required();
  eval->add_option("--point", req.point, "t=0.5,u=0.1,... or 0.5,0.1,...")->required();
  eval->add_option("--connection", req.connection, "named connection from the spec");
  eval->add_option("--P", req.P, "field for P");
  eval->add_option("--J", J_text, "structures, one per factor, comma separated");
  eval->add_flag("--catalog", req.catalog, "use the closed-form catalog instead of the definitions");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
  std::string vspec, out, csv;
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 0;
  int n = 20;
  double tol_rel = 1e-8, tol_abs = 1e-10;
  verify->add_option("spec", vspec, "optional spec file with verify defaults and fixture bindings");
  verify->add_option("--suite", suites,
                     "identities|curvature|christoffel|catalog|contraction|fixtures|degenerate-limit|all")
      ->delimiter(',');
  auto* o_seed = verify->add_option("--seed", seed);
  auto* o_n = verify->add_option("--n", n, "instances per item");
  auto* o_rel = verify->add_option("--tol-rel", tol_rel);
  auto* o_abs = verify->add_option("--tol-abs", tol_abs);
  verify->add_option("--out", out, "JSON report path");
  verify->add_option("--csv", csv, "CSV path for per-case rows");

  // fixtures
  auto* fx = app.add_subcommand("fixtures", "list or run the named space-times");
  bool list = false;
  std::string run, b, phi, fout, fcsv;
  std::vector<double> p;
  std::uint64_t fseed = 0;
  int fn = 20;
  double frel = 1e-8, fabs_ = 1e-10;
  fx->add_flag("--list", list);
  fx->add_option("--run", run, "M1, M2, M3 or M4");
  fx->add_option("--b", b, "warping or twisting b (M1, M4)");
  fx->add_option("--phi", phi, "phi (M2, M3)");
  fx->add_option("--p", p, "exponents p_j (M2, M3)")->delimiter(',');
  fx->add_option("--seed", fseed);
  fx->add_option("--n", fn);
  fx->add_option("--tol-rel", frel);
  fx->add_option("--tol-abs", fabs_);
  fx->add_option("--out", fout, "JSON report path");
  fx->add_option("--csv", fcsv, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) {
      const SpecFile spec = SpecFile::load(spec_path);
      for (const auto& a : CLI::detail::split(args_text, ',')) req.args.push_back(CLI::detail::trim_copy(a));
      if (!J_text.empty())
        for (const auto& a : CLI::detail::split(J_text, ',')) req.J.push_back(CLI::detail::trim_copy(a));
      const EvalResult r = evaluate(spec, req);
      std::printf("%.17g\n", r.value);
      if (!r.item.empty()) std::fprintf(stderr, "catalog item %s, key %s\n", r.item.c_str(), r.key.c_str());
      return 0;
    }

    if (*verify) {
      VerifyOptions opts;
      if (!vspec.empty()) opts = SpecFile::load(vspec).verify_options();
      if (*o_seed) opts.seed = seed;
      if (*o_n) opts.n = n;
      if (*o_rel) opts.tol.rel = tol_rel;
      if (*o_abs) opts.tol.abs = tol_abs;
      const VerifyReport rep = run_verify(suites, opts);
      emit(rep, out, csv);
      return rep.pass() ? 0 : 1;
    }

    if (*fx) {
      if (list) {
        for (const auto& f : fixtures()) {
          std::printf("%s  %s\n", f.name.c_str(), f.description.c_str());
          if (!f.defaults.b.empty()) std::printf("    default b = %s\n", f.defaults.b.c_str());
          if (!f.defaults.phi.empty()) {
            std::printf("    default phi = %s, p =", f.defaults.phi.c_str());
            for (double x : f.defaults.p) std::printf(" %g", x);
            std::printf("\n");
          }
          std::printf("    %zu rows\n", fixture_rows_of(f.name).size());
        }
        if (run.empty()) return 0;
      }
      if (run.empty()) throw SpecError("fixtures needs --list or --run NAME");
      const FixtureInfo& info = fixture(run);
      FixtureParams params = info.defaults;
      if (!b.empty()) params.b = b;
      if (!phi.empty()) params.phi = phi;
      if (!p.empty()) params.p = p;
      fixture_warpings(info, params);
      VerifyOptions opts;
      opts.seed = fseed;
      opts.n = fn;
      opts.tol = {frel, fabs_};
      opts.fixture_params.emplace_back(info.name, params);
      VerifyReport rep;
      rep.options = opts;
      rep.records = fixture_suite(opts, {info.name});
      SuiteSummary sum;
      sum.name = "fixture " + info.name;
      for (const auto& r : rep.records) {
        ++sum.cases;
        if (!r.pass()) ++sum.failures;
      }
      sum.pass = sum.failures == 0;
      if (info.product == ProductKind::Twisted) {
        rep.probes.push_back(degenerate_limit_probe(params.b, opts.seed, {"u1", "v1"}, true));
        if (rep.probes.back().skipped)
          sum.notes.push_back("degenerate-limit probe skipped: " + rep.probes.back().reason);
      }
      rep.suites.push_back(sum);
      rep.findings = collect_findings(rep.records);
      emit(rep, fout, fcsv);
      return rep.pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
