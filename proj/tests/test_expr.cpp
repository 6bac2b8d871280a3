#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "koszul/errors.hpp"
#include "koszul/expr.hpp"
#include "koszul/random.hpp"

using namespace kg;

namespace {

ChartPtr chart_tu() { return make_chart("M", {"t", "u"}); }

Expr V(int i) { return Expr::var(i); }

}  // namespace

TEST_CASE("grammar builds the expected trees") {
  auto c = chart_tu();
  CHECK(parse_expr("t^2 * (1 + u^2)", *c) ==
        Expr::binary(Op::Mul, Expr::binary(Op::Pow, V(0), Expr(2.0)),
                     Expr::binary(Op::Add, Expr(1.0), Expr::binary(Op::Pow, V(1), Expr(2.0)))));
  auto x = make_chart("X", {"x"});
  CHECK(parse_expr("sin(x) + cos(x)^2", *x) ==
        Expr::binary(Op::Add, Expr::unary(Op::Sin, V(0)),
                     Expr::binary(Op::Pow, Expr::unary(Op::Cos, V(0)), Expr(2.0))));
}

TEST_CASE("precedence and associativity") {
  auto c = chart_tu();
  CHECK(parse_expr("-t^2", *c) == Expr::unary(Op::Neg, Expr::binary(Op::Pow, V(0), Expr(2.0))));
  CHECK(parse_expr("t^u^2", *c) ==
        Expr::binary(Op::Pow, V(0), Expr::binary(Op::Pow, V(1), Expr(2.0))));
  CHECK(parse_expr("t - u - 1", *c) ==
        Expr::binary(Op::Sub, Expr::binary(Op::Sub, V(0), V(1)), Expr(1.0)));
  CHECK(parse_expr("t / u * 2", *c) ==
        Expr::binary(Op::Mul, Expr::binary(Op::Div, V(0), V(1)), Expr(2.0)));
  CHECK(parse_expr("t + u * 2", *c) ==
        Expr::binary(Op::Add, V(0), Expr::binary(Op::Mul, V(1), Expr(2.0))));
  CHECK(parse_expr("2^-t", *c) == Expr::binary(Op::Pow, Expr(2.0), Expr::unary(Op::Neg, V(0))));
  CHECK(parse_expr("1.5e-3", *c) == Expr(1.5e-3));
}

TEST_CASE("parse errors") {
  auto c = chart_tu();
  CHECK_THROWS_AS(parse_expr("", *c), EmptyExpression);
  CHECK_THROWS_AS(parse_expr("   ", *c), EmptyExpression);
  try {
    parse_expr("t + w", *c);
    FAIL("expected UnknownSymbol");
  } catch (const UnknownSymbol& e) {
    CHECK(e.name() == "w");
  }
  try {
    parse_expr("t + * u", *c);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_expr("(t + u", *c), SyntaxError);
  CHECK_THROWS_AS(parse_expr("sin t", *c), SyntaxError);
  CHECK_THROWS_AS(parse_expr("abs(t)", *c), UnknownSymbol);
  CHECK_THROWS_AS(parse_expr("t u", *c), SyntaxError);
}

TEST_CASE("jet examples") {
  auto t = make_chart("I", {"t"});
  Jet2 j = eval_jet2(parse_expr("t^2", *t), {3.0});
  CHECK(j.value == 9.0);
  CHECK(j.grad(0) == 6.0);
  CHECK(j.hess(0, 0) == 2.0);

  auto x = make_chart("X", {"x"});
  j = eval_jet2(parse_expr("sin(x)", *x), {0.0});
  CHECK(j.value == 0.0);
  CHECK(j.grad(0) == 1.0);
  CHECK(j.hess(0, 0) == 0.0);

  auto c = chart_tu();
  j = eval_jet2(parse_expr("t*u", *c), {2.0, 5.0});
  CHECK(j.value == 10.0);
  CHECK(j.grad(0) == 5.0);
  CHECK(j.grad(1) == 2.0);
  CHECK(j.hess(0, 1) == 1.0);
  CHECK(j.hess(1, 0) == 1.0);
  CHECK(j.hess(0, 0) == 0.0);
}

TEST_CASE("analytic derivatives of the elementary functions") {
  auto c = chart_tu();
  const std::vector<double> p{0.7, 1.3};
  Jet2 j = eval_jet2(parse_expr("exp(t*u)", *c), p);
  const double e = std::exp(0.91);
  CHECK(j.value == doctest::Approx(e));
  CHECK(j.grad(0) == doctest::Approx(1.3 * e));
  CHECK(j.hess(0, 1) == doctest::Approx(e + 0.91 * e));
  j = eval_jet2(parse_expr("log(t) + sqrt(u)", *c), p);
  CHECK(j.grad(0) == doctest::Approx(1 / 0.7));
  CHECK(j.hess(0, 0) == doctest::Approx(-1 / 0.49));
  CHECK(j.grad(1) == doctest::Approx(0.5 / std::sqrt(1.3)));
  CHECK(j.hess(1, 1) == doctest::Approx(-0.25 * std::pow(1.3, -1.5)));
  j = eval_jet2(parse_expr("t^1.5", *c), p);
  CHECK(j.hess(0, 0) == doctest::Approx(0.75 * std::pow(0.7, -0.5)));
  j = eval_jet2(parse_expr("t^u", *c), p);
  CHECK(j.grad(1) == doctest::Approx(std::pow(0.7, 1.3) * std::log(0.7)));
  j = eval_jet2(parse_expr("1/t", *c), p);
  CHECK(j.hess(0, 0) == doctest::Approx(2 / (0.7 * 0.7 * 0.7)));
}

TEST_CASE("domain errors") {
  auto c = chart_tu();
  CHECK_THROWS_AS(eval_jet2(parse_expr("log(t)", *c), {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse_expr("log(t)", *c), {-1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse_expr("sqrt(t)", *c), {-1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse_expr("u/t", *c), {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse_expr("t^0.5", *c), {-0.5, 1.0}), DomainError);
  CHECK(eval_jet2(parse_expr("t^3", *c), {-0.5, 1.0}).value == doctest::Approx(-0.125));
  CHECK(eval_jet2(parse_expr("t^-2", *c), {-0.5, 1.0}).value == doctest::Approx(4.0));
}

TEST_CASE("property: linearity") {
  auto c = chart_tu();
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Expr e1 = random_polynomial(rng, {0, 1}) * Expr::unary(Op::Sin, V(0));
    const Expr e2 = Expr::unary(Op::Exp, random_polynomial(rng, {0, 1}));
    const double a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
    const std::vector<double> p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Jet2 lhs = eval_jet2(Expr(a) * e1 + Expr(b) * e2, p);
    const Jet2 j1 = eval_jet2(e1, p), j2 = eval_jet2(e2, p);
    CHECK(std::abs(lhs.value - (a * j1.value + b * j2.value)) < 1e-12 * (1 + std::abs(lhs.value)));
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(lhs.grad(i) - (a * j1.grad(i) + b * j2.grad(i))) <
            1e-12 * (1 + std::abs(lhs.grad(i))));
      for (int k = 0; k < 2; ++k)
        CHECK(std::abs(lhs.hess(i, k) - (a * j1.hess(i, k) + b * j2.hess(i, k))) <
              1e-12 * (1 + std::abs(lhs.hess(i, k))));
    }
  }
}

TEST_CASE("property: product rule at 100 random points") {
  auto c = chart_tu();
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Expr e1 = Expr::unary(Op::Cos, random_polynomial(rng, {0, 1}));
    const Expr e2 = random_polynomial(rng, {0, 1});
    const std::vector<double> p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Jet2 prod = eval_jet2(e1 * e2, p), j1 = eval_jet2(e1, p), j2 = eval_jet2(e2, p);
    for (int i = 0; i < 2; ++i) {
      const double want = j1.value * j2.grad(i) + j2.value * j1.grad(i);
      CHECK(std::abs(prod.grad(i) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("property: parse(print(parse(s))) == parse(s)") {
  auto c = make_chart("M", {"t", "u", "x1"});
  const char* corpus[] = {
      "t", "1", "t + u", "t - u - x1", "t - (u - x1)", "t * u / x1", "t / (u * x1)",
      "-t", "--t", "-t^2", "(-t)^2", "t^u^2", "(t^u)^2", "2^-t", "t^(-1)", "t^-1.5",
      "sin(t)", "cos(t)^2", "exp(-t*u)", "log(1 + t^2)", "sqrt(2 + u)", "sin(cos(exp(t)))",
      "t^2 * (1 + u^2)", "sin(x1) + cos(x1)^2", "1e-3 * t", "2.5e10 + u", "0.1 + 0.2",
      "(t + u) * (t - u)", "t * (u + x1) * 3", "-(t + u)", "-(t * u)", "-sin(t)",
      "t - -u", "t * -u", "t / -u", "(t + u)^2", "(t * u)^0.5", "t^2^3", "-t^-u",
      "exp(t) / (1 + exp(t))", "log(t) - log(u)", "sqrt(t^2 + u^2)", "pi * t",
      "((t))", "t + (u + x1)", "t * (u * x1)", "(t - u) / (t + u)", "3 - 2 - 1",
      "cos(t)*sin(u) - sin(t)*cos(u)", "1/(1 + t^2 + u^2 + x1^2)"};
  int count = 0;
  for (const char* s : corpus) {
    const Expr e = parse_expr(s, *c);
    const std::string printed = print_expr(e, *c);
    CHECK_MESSAGE(parse_expr(printed, *c) == e, s, " -> ", printed);
    ++count;
  }
  CHECK(count == 50);
}

TEST_CASE("symbolic derivative agrees with jets") {
  auto c = chart_tu();
  const char* corpus[] = {"t^2 * (1 + u^2)", "sin(t*u) + exp(u)", "log(1 + t^2) / (2 + u)",
                          "sqrt(3 + t*u)", "t^1.5 * u", "(1 + t)^u", "cos(t)^3"};
  const std::vector<double> p{0.4, 0.9};
  for (const char* s : corpus) {
    const Expr e = parse_expr(s, *c);
    const Jet2 j = eval_jet2(e, p);
    for (int k = 0; k < 2; ++k) {
      const Jet2 dk = eval_jet2(diff(e, k), p);
      CHECK(dk.value == doctest::Approx(j.grad(k)).epsilon(1e-12));
      for (int i = 0; i < 2; ++i) CHECK(dk.grad(i) == doctest::Approx(j.hess(k, i)).epsilon(1e-12));
    }
  }
}

TEST_CASE("remap rebinds coordinates") {
  auto c = chart_tu();
  const Expr e = parse_expr("t * u^2", *c);
  const Expr r = remap(e, {3, 1});
  std::set<int> vars;
  r.collect_vars(vars);
  CHECK(vars == std::set<int>{1, 3});
  CHECK_THROWS_AS(remap(e, {0, -1}), SpecMismatch);
}
