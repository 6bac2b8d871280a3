#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "koszul/errors.hpp"
#include "koszul/spec_file.hpp"
#include "koszul/verify.hpp"

using namespace kg;
using json = nlohmann::json;

namespace {

const char* kSpec = R"js({
  "charts": [
    {"name": "F", "coords": ["u", "v", "w"], "domain": [[-1, 1], [-1, 1], [-1, 1]]},
    {"name": "P2", "coords": ["x", "y"]},
    {"name": "G", "coords": ["a", "c"], "domain": [[-1, 1], [-1, 1]]}
  ],
  "metrics": [
    {"name": "gF", "chart": "F", "diagonal": ["1", "2", "1 + u^2"]},
    {"name": "sphere", "chart": "P2", "matrix": [["1", "0"], ["0", "cos(x)^2"]]},
    {"name": "gG", "chart": "G", "diagonal": ["1", "1"]}
  ],
  "fields": [
    {"name": "V", "chart": "F", "components": ["1", "0", "v"]},
    {"name": "W", "chart": "F", "components": ["0", "1", "u"]},
    {"name": "A", "chart": "P2", "components": ["1", "0"]},
    {"name": "B", "chart": "P2", "components": ["0", "1"]}
  ],
  "connections": [{"name": "ssm-dt", "kind": "ssm", "P": "dt"}],
  "fixtures": [
    {"name": "M1", "fixture": "M1", "b": "t^2", "fibers": [{"chart": "F", "metric": "gF"}]},
    {"name": "M4", "fixture": "M4", "b": "t*(1 + a^2)", "fibers": [{"chart": "G", "metric": "gG"}]}
  ],
  "verify": {"seed": 3, "n": 5}
})js";

double eval(const SpecFile& s, const std::string& on, const std::string& obj, std::vector<std::string> args,
            const std::string& point, const std::string& P = "") {
  EvalRequest r;
  r.on = on;
  r.object = obj;
  r.args = std::move(args);
  r.point = point;
  r.P = P;
  return evaluate(s, r).value;
}

VerifyOptions small() {
  VerifyOptions o;
  o.identity_n = 30;
  o.curvature_n = 12;
  o.christoffel_n = 10;
  o.n = 2;
  return o;
}

int run(const std::string& cmd) {
  const int st = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string capture(const std::string& cmd) {
  std::string out;
  if (FILE* f = popen(cmd.c_str(), "r")) {
    char buf[256];
    while (fgets(buf, sizeof buf, f)) out += buf;
    pclose(f);
  }
  return out;
}

}  // namespace

TEST_CASE("spec file evaluation") {
  const SpecFile s = SpecFile::parse(kSpec);
  const double gVW = 2.0 * 0.0 + (1 + 0.04) * 0.3 * 0.2;  // V=(1,0,v), W=(0,1,u) at u=0.2, v=0.3
  CHECK(eval(s, "M1", "Rbar", {"dt", "V", "W", "dt"}, "t=0.5,u=0.2,v=0.3,w=0", "dt") ==
        doctest::Approx(-0.25 * gVW).epsilon(1e-13));
  CHECK(eval(s, "M1", "Khat", {"dt", "dt", "dt"}, "0.5,0.2,0.3,0", "dt") == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval(s, "sphere", "R", {"A", "B", "B", "A"}, "x=0.4,y=1") ==
        doctest::Approx(std::cos(0.4) * std::cos(0.4)).epsilon(1e-12));

  EvalRequest r{"M1", "ssm-curvature", {"dt", "V", "W", "dt"}, "t=0.5,u=0.2,v=0.3,w=0", "ssm-dt", "", {}, true};
  const EvalResult cat = evaluate(s, r);
  CHECK(cat.item == "ssm-curvature/warped/P-base (4)");
  CHECK(cat.value == doctest::Approx(-0.25 * gVW).epsilon(1e-13));

  CHECK(s.verify_options().seed == 3);
  CHECK(s.verify_options().n == 5);
  REQUIRE(s.verify_options().fixture_params.size() == 2);
  CHECK(s.verify_options().fixture_params[1].second.b == "t*(1 + a^2)");
}

TEST_CASE("spec file errors") {
  const SpecFile s = SpecFile::parse(kSpec);
  CHECK_THROWS_AS(eval(s, "M1", "Rbar", {"dt", "V", "Z", "dt"}, "0.5,0,0,0", "dt"), SpecError);
  CHECK_THROWS_AS(eval(s, "M1", "Rbar", {"dt", "V", "W", "dt"}, "0.5,0,0,0"), SpecError);
  CHECK_THROWS_AS(eval(s, "M1", "Rbarr", {"dt", "V", "W", "dt"}, "0.5,0,0,0", "dt"), SpecError);
  CHECK_THROWS_AS(eval(s, "M1", "R", {"dt", "V", "W"}, "0.5,0,0,0"), SpecError);
  CHECK_THROWS_AS(eval(s, "M1", "R", {"dt", "V", "W", "dt"}, "t=0.5,u=0"), SpecError);
  CHECK_THROWS_AS(eval(s, "M9", "R", {"dt", "V", "W", "dt"}, "0.5,0,0,0"), SpecError);
  try {
    eval(s, "M1", "R", {"dt", "V", "W", "dt"}, "t=0.5,u=3,v=0,w=0");
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("coordinate u ") != std::string::npos);
  }
  // t = 0 is outside the open interval, before b = 0 matters
  CHECK_THROWS_AS(eval(s, "M4", "R", {"dt", "da", "dc", "dt"}, "t=0,a=0,c=0"), DomainError);

  CHECK_THROWS_AS(SpecFile::parse("{"), SpecError);
  CHECK_THROWS_AS(SpecFile::parse(R"js({"charts": [{"name": "C", "coords": ["x"]}],
      "metrics": [{"name": "g", "chart": "C", "diagonal": ["1 + z"]}]})js"),
                  UnknownSymbol);
  CHECK_THROWS_AS(SpecFile::parse(R"js({"metrics": [{"name": "g", "chart": "C", "diagonal": ["1"]}]})js"), SpecError);
  CHECK_THROWS_AS(SpecFile::parse(R"js({"fixtures": [{"name": "M7", "fibers": []}]})js"), UnknownFixture);
  CHECK_THROWS_AS(SpecFile::parse(R"js({"charts": [{"name": "C", "coords": ["t"]}, {"name": "C", "coords": ["s"]}]})js"),
                  SpecError);
}

TEST_CASE("degenerate point is a singularity") {
  const SpecFile s = SpecFile::parse(R"js({
    "charts": [{"name": "I", "coords": ["t"]}, {"name": "F", "coords": ["u"]}],
    "metrics": [{"name": "gI", "chart": "I", "diagonal": ["-1"]}, {"name": "gF", "chart": "F", "diagonal": ["1"]}],
    "products": [{"name": "W", "kind": "warped", "base": {"chart": "I", "metric": "gI"},
                  "fibers": [{"chart": "F", "metric": "gF", "warping": "t"}]}]})js");
  CHECK_THROWS_AS(eval(s, "W", "R", {"dt", "du", "du", "dt"}, "t=0,u=0"), SingularMetric);
  CHECK(eval(s, "W", "R", {"dt", "du", "du", "dt"}, "t=1,u=0") == doctest::Approx(0.0));
}

TEST_CASE("point parsing") {
  auto c = make_chart("C", {"t", "u"});
  CHECK(parse_point("t=1,u=-2.5", *c) == Point{1.0, -2.5});
  CHECK(parse_point("u=3, t=4", *c) == Point{4.0, 3.0});
  CHECK(parse_point("1,2", *c) == Point{1.0, 2.0});
  CHECK_THROWS_AS(parse_point("1", *c), SpecError);
  CHECK_THROWS_AS(parse_point("t=1,x=2", *c), SpecError);
  CHECK_THROWS_AS(parse_point("t=1,u=abc", *c), SpecError);
}

TEST_CASE("report is deterministic and carries keys and labels") {
  const std::vector<std::string> suites{"identities", "christoffel", "catalog", "degenerate-limit"};
  const VerifyReport a = run_verify(suites, small());
  const VerifyReport b = run_verify(suites, small());
  CHECK(report_body(a) == report_body(b));
  CHECK(report_csv(a) == report_csv(b));

  auto other = small();
  other.seed = 1;
  CHECK(report_body(run_verify({"identities"}, other)) != report_body(run_verify({"identities"}, small())));

  const json doc = json::parse(report_json(a));
  CHECK(doc.contains("timing"));
  CHECK(doc["body_hash"] == body_hash(report_body(a)));
  const json body = json::parse(report_body(a));
  CHECK_FALSE(body.contains("timing"));
  for (const auto& r : body["records"]) {
    CHECK(r.contains("key"));
    CHECK(r.contains("item"));
    CHECK(r.contains("seed"));
  }
  for (const auto& r : body["records"])
    if (r["suite"] == "catalog") {
      CHECK(r["key"].get<std::string>().find('/') != std::string::npos);
      CHECK(r["item"].get<std::string>().find(" (") != std::string::npos);
    }
  CHECK(body["worst_offenders"].size() <= 10);
  CHECK(body["suites"].size() == 4);
  CHECK_THROWS_AS(run_verify({"nope"}, small()), SpecError);
}

TEST_CASE("findings group failing records") {
  std::vector<CaseRecord> recs(4);
  for (int i = 0; i < 4; ++i) {
    recs[i].suite = "catalog";
    recs[i].check = i < 3 ? "a (1)" : "b (2)";
    recs[i].cmp = {1.0 * i, 0.1 * i, i != 1 && i != 2};
  }
  const auto f = collect_findings(recs);
  REQUIRE(f.size() == 1);
  CHECK(f[0].check == "a (1)");
  CHECK(f[0].cases == 3);
  CHECK(f[0].failures == 2);
  CHECK(f[0].worst_abs == 2.0);
}

TEST_CASE("degenerate-limit probe") {
  const LimitProbe h = degenerate_limit_probe("t^2*(1+u^2)/4", 0);
  CHECK(h.hypothesis);
  REQUIRE(h.b_values.size() >= 6);
  CHECK(h.b_values.front() == doctest::Approx(1e-2));
  for (const auto& s : h.series) {
    CHECK(s.bound < 1e6);
    CHECK(s.cauchy < 1e-6);
    // catalog and definitions agree along the sequence while b is not tiny
    for (size_t k = 0; k < 4; ++k) CHECK(std::abs(s.catalog[k] - s.oracle[k]) <= 1e-8 * (1 + std::abs(s.oracle[k])));
  }
  const LimitProbe c = degenerate_limit_probe("t*(1+u^2)/2", 0);
  CHECK_FALSE(c.hypothesis);
  CHECK_FALSE(c.skipped);
}

TEST_CASE("command line") {
  const std::string cli = KOSZUL_CLI;
  const std::string spec = std::string(KOSZUL_SOURCE_DIR) + "/specs/m1.json";
  const std::string at = " --point t=0.5,u=0.2,v=0.1,w=0";
  CHECK(capture(cli + " eval " + spec + " --on M1 --object Khat --args dt,dt,dt --P dt" + at) == "1\n");
  CHECK(std::stod(capture(cli + " eval " + spec + " --on M1 --object Rbar --args dt,V,W,dt --P dt" + at)) ==
        doctest::Approx(-0.07525).epsilon(1e-14));
  CHECK(run(cli + " eval " + spec + " --on M1 --object Rbar --args dt,V,W,dt --P dt --point t=9,u=0,v=0,w=0") == 3);
  CHECK(run(cli + " eval " + spec + " --on M1 --object Rbar --args dt,V,Z,dt --P dt" + at) == 2);
  CHECK(run(cli + " eval /nonexistent.json --on M1 --object R --args dt,dt,dt,dt" + at) == 2);
  CHECK(run(cli + " eval " + spec + " --bogus") == 2);
  CHECK(run(cli + " fixtures --run M7") == 2);
  CHECK(run(cli + " fixtures --list") == 0);
  CHECK(run(cli + " verify --suite identities --seed 42") == 0);
  CHECK(run(cli + " verify --suite nope") == 2);
  const std::string out = capture(cli + " fixtures --run M4 --n 2");
  CHECK(out.find("skipped") != std::string::npos);
}
