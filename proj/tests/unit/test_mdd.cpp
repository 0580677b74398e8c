#include "gcalc/charts.hpp"
#include "gcalc/field.hpp"
#include "gcalc/mdd.hpp"
#include "helpers.hpp"

using namespace gcalc;

namespace {
FieldPtr named(const Chart& c, const char* name) { return field_from_def(c, c.fields.at(name)); }
constexpr Mask E1 = 0b001, E2 = 0b010, E3 = 0b100, E12 = 0b011;
}  // namespace

TEST_CASE("flat directional derivative") {
  const Chart e2 = builtin_chart("euclid2");
  const double p[] = {0.4, 1.1};
  const double a[] = {1.0, 0.0};
  check_mv(mdd(e2, named(e2, "xe1"), a, p), mv(2, {{E1, 1.0}}));
}

TEST_CASE("sphere2 derivative of e_phi along e_theta") {
  const Chart s = builtin_chart("sphere2");
  const double p[] = {kPi / 4, 0.0};
  const double a[] = {1.0, 0.0};
  check_mv(mdd(s, named(s, "e_phi"), a, p), mv(2, {{E2, 1.0}}), 1e-14);
}

TEST_CASE("gradient, divergence, curl") {
  const Chart e2 = builtin_chart("euclid2");
  const double p[] = {1.0, 2.0};
  check_mv(gradient(e2, named(e2, "phi"), p), mv(2, {{E1, 2.0}, {E2, 4.0}}));
  check_mv(gradient(e2, named(e2, "xe1"), p), mv(2, {{0, 1.0}}));
  check_mv(divergence(e2, named(e2, "xe1"), p), mv(2, {{0, 1.0}}));
  check_mv(curl(e2, named(e2, "xe1"), p), Multivector(2));
  check_mv(divergence(e2, named(e2, "phi"), p), Multivector(2));
  const FieldPtr top = expr_field(2, "coord", {{E12, expr::parse("x*y", e2.coords)}});
  check_mv(curl(e2, top, p), Multivector(2));

  const Chart e3 = builtin_chart("euclid3");
  const double q[] = {0.3, -0.7, 1.9};
  const Multivector c = curl(e3, named(e3, "swirl"), q);
  check_mv(c, mv(3, {{E12, 2.0}}));
  check_mv(dual(c, Gram::identity(3)), mv(3, {{E3, 2.0}}));
}

TEST_CASE("exterior derivative") {
  const Chart e2 = builtin_chart("euclid2");
  const double p[] = {0.6, -0.3};
  const FieldPtr x = expr_field(2, "grad", {{0, expr::parse("x", e2.coords)}});
  check_mv(ext_d(e2, x, p), mv(2, {{E1, 1.0}}));
  const FieldPtr xdy = expr_field(2, "grad", {{E2, expr::parse("x", e2.coords)}});
  check_mv(ext_d(e2, xdy, p), mv(2, {{E12, 1.0}}));
}

TEST_CASE("codifferential") {
  const Chart e2 = builtin_chart("euclid2");
  const double p[] = {0.6, -0.3};
  check_mv(codifferential(e2, named(e2, "phi"), p), Multivector(2));
  const Chart e3 = builtin_chart("euclid3");
  const double q[] = {0.3, -0.7, 1.9};
  check_mv(codifferential(e3, named(e3, "xe1"), q), mv(3, {{0, 1.0}}));
  const CodiffRoutes r = codifferential_routes(builtin_chart("sphere2"), named(builtin_chart("sphere2"), "e_theta"),
                                               std::vector<double>{0.9, 0.2});
  CHECK(r.sign == -1.0);
  CHECK(r.residual < 1e-12);
}

TEST_CASE("second derivatives") {
  const Chart e2 = builtin_chart("euclid2");
  const double p[] = {1.0, 2.0};
  const double a[] = {1.0, 0.0};
  const SecondOps s = second_ops(e2, named(e2, "phi"), a, p);
  check_mv(s.wedge_wedge, Multivector(2));
  check_mv(s.square, mv(2, {{0, 4.0}}));
  check_mv(s.dot_dot, mv(2, {{0, 4.0}}));
  check_mv(s.grad_grad, mv(2, {{0, 4.0}}));
  check_mv(s.directional, mv(2, {{0, 2.0}}));
}

TEST_CASE("jet budget") {
  const Chart e2 = builtin_chart("euclid2");
  const FieldPtr phi = named(e2, "phi");
  const FieldPtr g = gradient_field(phi);
  const FieldPtr gg = gradient_field(g);
  CHECK(phi->budget() == 2);
  CHECK(gg->budget() == 0);
  PointContext ctx(e2, {1.0, 2.0});
  check_mv(gg->at(ctx), mv(2, {{0, 4.0}}));
  CHECK_THROWS_AS(gradient_field(gg)->at(ctx), JetBudgetExhausted);
}

TEST_CASE("frame mismatch is rejected") {
  const Chart e2 = builtin_chart("euclid2");
  const FieldPtr a = named(e2, "xe1");
  const FieldPtr b = reexpress(a, "grad");
  CHECK_THROWS_AS(add(a, b), FrameMismatch);
  PointContext ctx(e2, {1.0, 2.0});
  check_mv(b->at(ctx), a->at(ctx));
}
