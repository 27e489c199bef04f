#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "adsfront/expr.hpp"
#include "adsfront/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adsfront;
using namespace adsfront::expr;
using testsupport::Rng;

TEST_CASE("parse precedence and evaluation basics") {
  CHECK(eval(parse("sqrt(2)*cos(t)"), 0.0, 0.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(eval(parse("cos(s)^2"), 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(eval(parse("sinh(s)"), 0.0, 5.0) == doctest::Approx(0.0));
  CHECK(eval(parse("1 + 2*3"), 0, 0) == doctest::Approx(7.0));
  CHECK(eval(parse("2*3 + 1"), 0, 0) == doctest::Approx(7.0));
  CHECK(eval(parse("-2^2"), 0, 0) == doctest::Approx(-4.0));  // ^ binds tighter
  CHECK(eval(parse("(1+2)*3"), 0, 0) == doctest::Approx(9.0));
  CHECK(eval(parse("8/4/2"), 0, 0) == doctest::Approx(1.0));  // left assoc
  CHECK(eval(parse("1 - 2 - 3"), 0, 0) == doctest::Approx(-4.0));
  CHECK(eval(parse("2e-1 + 1.5E1"), 0, 0) == doctest::Approx(15.2));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse(""), SyntaxError);
  try {
    parse("s + * t");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& err) {
    CHECK(err.offset == 4);
  }
  CHECK_THROWS_AS(parse("foo(s)"), UnknownFunctionError);
  CHECK_THROWS_AS(parse("cos(q)"), UnknownVariableError);
  CHECK_THROWS_AS(parse("2s"), SyntaxError);        // no implicit multiply
  CHECK_THROWS_AS(parse("s^t"), SyntaxError);       // literal exponent only
  CHECK_THROWS_AS(parse("cos(s"), SyntaxError);     // unbalanced paren
  CHECK_THROWS_AS(parse("1e+"), SyntaxError);       // malformed exponent
}

TEST_CASE("domain errors surface with the offending subexpression") {
  CHECK_THROWS_AS(eval(parse("log(s)"), -1.0, 0.0), DomainError);
  CHECK_THROWS_AS(eval(parse("sqrt(s)"), -1.0, 0.0), DomainError);
  try {
    eval(parse("1 + log(s - 2)"), 0.0, 0.0);
    FAIL("expected DomainError");
  } catch (const DomainError& err) {
    CHECK(std::string(err.what()).find("log(s - 2)") != std::string::npos);
  }
}

TEST_CASE("symbolic derivative spot checks") {
  const ExprPtr e = parse("cos(s)^2");
  const ExprPtr de = differentiate(e, Var::S);
  CHECK(eval(de, 0.0, 0.0) == doctest::Approx(0.0));
  CHECK(eval(de, 0.3, 0.0) ==
        doctest::Approx(-2.0 * std::cos(0.3) * std::sin(0.3)).epsilon(1e-14));

  // fourth derivative of sin is sin again
  ExprPtr d4 = parse("sin(s)");
  for (int i = 0; i < 4; ++i) d4 = differentiate(d4, Var::S);
  CHECK(eval(d4, 0.0, 0.0) == doctest::Approx(0.0));
  CHECK(eval(d4, 1.1, 0.0) == doctest::Approx(std::sin(1.1)).epsilon(1e-12));

  const ExprPtr dt = differentiate(parse("s"), Var::T);
  CHECK(dt->kind == Expr::Kind::Constant);
  CHECK(dt->constant == 0.0);
}

namespace {

// Random expression tree over the supported function set, depth-bounded,
// built to stay in-domain on |s|,|t| <= 1.2 (log/sqrt get cosh shields).
ExprPtr random_expr(Rng& rng, int depth) {
  const int pick = static_cast<int>(rng.next_u64() % (depth == 0 ? 3 : 10));
  switch (pick) {
    case 0: return make_constant(rng.uniform(-2.0, 2.0));
    case 1: return make_variable(Var::S);
    case 2: return make_variable(Var::T);
    case 3:
      return make_binary(BinOp::Add, random_expr(rng, depth - 1),
                         random_expr(rng, depth - 1));
    case 4:
      return make_binary(BinOp::Mul, random_expr(rng, depth - 1),
                         random_expr(rng, depth - 1));
    case 5: {
      // keep the denominator away from zero
      ExprPtr den = make_binary(BinOp::Add, make_constant(3.0),
                                make_call(Func::Sin, random_expr(rng, 0)));
      return make_binary(BinOp::Div, random_expr(rng, depth - 1), den);
    }
    case 6: {
      const Func f[] = {Func::Sin, Func::Cos, Func::Tanh, Func::Sinh,
                        Func::Cosh};
      return make_call(f[rng.next_u64() % 5], random_expr(rng, depth - 1));
    }
    case 7:
      return make_call(
          Func::Log,
          make_call(Func::Cosh, random_expr(rng, depth - 1)));
    case 8:
      return make_call(
          Func::Sqrt,
          make_binary(BinOp::Add, make_constant(2.0),
                      make_call(Func::Sin, random_expr(rng, depth - 1))));
    default:
      return make_pow(
          make_binary(BinOp::Add, make_constant(3.0),
                      make_call(Func::Cos, random_expr(rng, depth - 1))),
          static_cast<double>(1 + rng.next_u64() % 3));
  }
}

}  // namespace

TEST_CASE("symbolic derivatives match finite differences on random trees") {
  Rng rng(101);
  int tested = 0;
  for (int it = 0; it < 400 && tested < 120; ++it) {
    const ExprPtr e = random_expr(rng, 4);
    const ExprPtr de = differentiate(e, Var::S);
    const double s0 = rng.uniform(-1.2, 1.2);
    const double t0 = rng.uniform(-1.2, 1.2);
    double sym = 0.0, fd = 0.0;
    try {
      sym = eval(de, s0, t0);
      fd = oracle::fd_derivative(
          [&](double x) { return eval(e, x, t0); }, s0, 1,
          oracle::FDScheme{4, 1e-3});
    } catch (const DomainError&) {
      continue;  // rare: a random tree leaves its domain on the stencil
    }
    if (!std::isfinite(sym) || std::fabs(sym) > 1e6) continue;
    ++tested;
    const double scale = 1.0 + std::fabs(sym);
    CHECK(std::fabs(sym - fd) <= 1e-6 * scale);
  }
  CHECK(tested >= 100);
}

TEST_CASE("fourth-order symbolic derivatives stay accurate") {
  Rng rng(103);
  int tested = 0;
  for (int it = 0; it < 200 && tested < 40; ++it) {
    const ExprPtr e = random_expr(rng, 3);
    ExprPtr d4 = e;
    for (int k = 0; k < 4; ++k) d4 = differentiate(d4, Var::S);
    const double s0 = rng.uniform(-1.0, 1.0);
    const double t0 = rng.uniform(-1.0, 1.0);
    double sym = 0.0, fd = 0.0;
    try {
      sym = eval(d4, s0, t0);
      fd = oracle::fd_derivative(
          [&](double x) { return eval(e, x, t0); }, s0, 4,
          oracle::FDScheme{4, 1e-2});
    } catch (const DomainError&) {
      continue;
    }
    if (!std::isfinite(sym) || std::fabs(sym) > 1e4) continue;
    ++tested;
    const double scale = 1.0 + std::fabs(sym);
    CHECK(std::fabs(sym - fd) <= 2e-4 * scale);
  }
  CHECK(tested >= 30);
}

TEST_CASE("print / reparse round trip evaluates identically") {
  Rng rng(107);
  for (int it = 0; it < 60; ++it) {
    const ExprPtr e = random_expr(rng, 4);
    const std::string text = to_string(e);
    const ExprPtr back = parse(text);
    for (int p = 0; p < 100; ++p) {
      const double s0 = rng.uniform(-1.2, 1.2);
      const double t0 = rng.uniform(-1.2, 1.2);
      double v1 = 0.0, v2 = 0.0;
      try {
        v1 = eval(e, s0, t0);
        v2 = eval(back, s0, t0);
      } catch (const DomainError&) {
        continue;
      }
      const double scale = 1.0 + std::fabs(v1);
      CHECK(std::fabs(v1 - v2) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("tape evaluation agrees with the tree evaluator") {
  Rng rng(109);
  for (int it = 0; it < 60; ++it) {
    const ExprPtr e = random_expr(rng, 4);
    const Tape tape(e);
    for (int p = 0; p < 50; ++p) {
      const double s0 = rng.uniform(-1.2, 1.2);
      const double t0 = rng.uniform(-1.2, 1.2);
      double v1 = 0.0;
      try {
        v1 = eval(e, s0, t0);
      } catch (const DomainError&) {
        continue;
      }
      CHECK(tape.eval(s0, t0) == doctest::Approx(v1).epsilon(1e-13));
    }
  }
}
