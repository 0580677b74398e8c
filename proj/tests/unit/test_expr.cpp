#include <vector>

#include "gcalc/error.hpp"
#include "gcalc/expr.hpp"
#include "helpers.hpp"

using namespace gcalc;
using namespace gcalc::expr;

namespace {
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kTP{"theta", "phi"};
}  // namespace

TEST_CASE("parse builds the grammar-forced tree") {
  const Expr e = parse("sin(theta)^2", kTP);
  REQUIRE(e.kind() == Kind::Binary);
  CHECK(e.op() == BinOp::Pow);
  CHECK(e.lhs().kind() == Kind::Call);
  CHECK(e.lhs().func() == Func::Sin);
  CHECK(e.lhs().lhs().kind() == Kind::Coord);
  CHECK(e.lhs().lhs().coord_index() == 0);
  CHECK(e.rhs().number_value() == 2.0);

  const Expr f = parse("x*y + 1", kXY);
  REQUIRE(f.op() == BinOp::Add);
  CHECK(f.lhs().op() == BinOp::Mul);
  CHECK(f.lhs().lhs().coord_index() == 0);
  CHECK(f.lhs().rhs().coord_index() == 1);
  CHECK(f.rhs().number_value() == 1.0);
}

TEST_CASE("malformed input reports a position") {
  const std::vector<std::string> x{"x"};
  try {
    parse("sin(", x);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& err) {
    CHECK(err.position() == 4);
  }
  CHECK_THROWS_AS(parse("foo(x)", x), UnknownIdentifier);
  CHECK_THROWS_AS(parse("q + 1", x), UnknownIdentifier);
  CHECK_THROWS_AS(parse("x +", x), SyntaxError);
  CHECK_THROWS_AS(parse("(x", x), SyntaxError);
}

TEST_CASE("power is right associative and binds tighter than unary minus") {
  const std::vector<std::string> x{"x"};
  const double p[] = {2.0};
  CHECK(evaluate<double>(parse("2^3^2", x), p) == doctest::Approx(512.0));
  CHECK(evaluate<double>(parse("-x^2", x), p) == doctest::Approx(-4.0));
  CHECK(evaluate<double>(parse("x-1-1", x), p) == doctest::Approx(0.0));
}

TEST_CASE("canonical printing round-trips") {
  for (const char* s : {"x*y + 1", "-(x^2)/3 + sin(y)^-1", "exp(-x)*cosh(y)", "2^3^2", "abs(x-y)", "1e-3*x"}) {
    const Expr e = parse(s, kXY);
    const std::string printed = to_string(e, kXY);
    CHECK(parse(printed, kXY) == e);
    CHECK(to_string(parse(printed, kXY), kXY) == printed);
  }
}

TEST_CASE("jets of a product") {
  const double p[] = {2.0, 3.0};
  const Jet2 j = eval_jet2(parse("x*y", kXY), p);
  CHECK(j.value == 6.0);
  CHECK(j.grad[0] == 3.0);
  CHECK(j.grad[1] == 2.0);
  CHECK(j.h(0, 0) == 0.0);
  CHECK(j.h(0, 1) == 1.0);
  CHECK(j.h(1, 0) == 1.0);
  CHECK(j.h(1, 1) == 0.0);
}

TEST_CASE("jets of sin^2 at pi/4") {
  const double p[] = {kPi / 4, 0.0};
  const Jet2 j = eval_jet2(parse("sin(theta)^2", kTP), p);
  CHECK(j.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(j.grad[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(j.h(0, 0)) < 1e-15);
  CHECK(j.grad[1] == 0.0);
}

TEST_CASE("domain errors") {
  const std::vector<std::string> x{"x"};
  const double zero[] = {0.0};
  const double neg[] = {-1.0};
  CHECK_THROWS_AS(eval_jet2(parse("1/x", x), zero), DomainError);
  CHECK_THROWS_AS(evaluate<double>(parse("1/x", x), zero), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse("log(x)", x), neg), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse("sqrt(x)", x), zero), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse("x^0.5", x), neg), DomainError);
  // Integer powers of negative bases are fine.
  CHECK(eval_jet2(parse("x^3", x), neg).value == -1.0);
}

TEST_CASE("whitelist derivatives against closed forms") {
  const std::vector<std::string> x{"x"};
  const double p[] = {0.3};
  struct Case {
    const char* text;
    double d1;
    double d2;
  };
  const double t = std::tan(0.3), th = std::tanh(0.3);
  const Case cases[] = {
      {"sin(x)", std::cos(0.3), -std::sin(0.3)},
      {"cos(x)", -std::sin(0.3), -std::cos(0.3)},
      {"tan(x)", 1 + t * t, 2 * t * (1 + t * t)},
      {"exp(x)", std::exp(0.3), std::exp(0.3)},
      {"log(x)", 1 / 0.3, -1 / 0.09},
      {"sqrt(x)", 0.5 / std::sqrt(0.3), -0.25 / (0.3 * std::sqrt(0.3))},
      {"sinh(x)", std::cosh(0.3), std::sinh(0.3)},
      {"cosh(x)", std::sinh(0.3), std::cosh(0.3)},
      {"tanh(x)", 1 - th * th, -2 * th * (1 - th * th)},
      {"abs(x)", 1.0, 0.0},
      {"x^2.5", 2.5 * std::pow(0.3, 1.5), 3.75 * std::pow(0.3, 0.5)},
  };
  for (const auto& c : cases) {
    INFO(c.text);
    const Jet2 j = eval_jet2(parse(c.text, x), p);
    CHECK(j.grad[0] == doctest::Approx(c.d1).epsilon(1e-13));
    CHECK(j.h(0, 0) == doctest::Approx(c.d2).epsilon(1e-13));
  }
}

TEST_CASE("long double evaluation agrees with double") {
  const double p[] = {0.7, -0.4};
  const long double q[] = {0.7L, -0.4L};
  const Expr e = parse("exp(sin(x*y))/(2+cos(y))", kXY);
  CHECK(static_cast<double>(evaluate<long double>(e, q)) == doctest::Approx(evaluate<double>(e, p)).epsilon(1e-15));
}
