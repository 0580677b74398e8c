#include "gcalc/charts.hpp"
#include "gcalc/forms.hpp"
#include "helpers.hpp"

using namespace gcalc;

namespace {
constexpr Mask DX = 0b01, DY = 0b10, DXY = 0b11;
}

TEST_CASE("form exterior derivative") {
  const Chart e2 = builtin_chart("euclid2");
  const auto x = [&](const char* t) { return expr::parse(t, e2.coords); };
  PointContext ctx(e2, {0.7, -1.3});
  check_mv(form_d(make_form(2, {{DY, x("x")}})).at(ctx), mv(2, {{DXY, 1.0}}));
  check_mv(form_d(make_form(2, {{0, x("x^2+y^2")}})).at(ctx), mv(2, {{DX, 1.4}, {DY, -2.6}}));
  const Form f = make_form(2, {{DX, x("sin(x*y)")}, {DY, x("exp(x)*y")}});
  check_mv(form_d(form_d(f)).at(ctx), Multivector(2), 1e-13);
  check_mv(form_wedge(make_form(2, {{DX, x("1")}}), make_form(2, {{DY, x("y")}})).at(ctx), mv(2, {{DXY, -1.3}}));
  check_mv(form_add(f, form_scale(f, -1.0)).at(ctx), Multivector(2));
}

TEST_CASE("hat map") {
  const Chart pol = builtin_chart("polar2");
  PointContext ctx(pol, {1.2, 0.5});
  const FieldPtr one = constant_field("grad", Multivector::scalar(2, 1.0));
  check_mv(hat_map(one).at(ctx), mv(2, {{0, 1.0}}));
  const FieldPtr top = constant_field("grad", Multivector::blade(2, DXY));
  check_mv(hat_map(top).at(ctx), mv(2, {{DXY, 1.0}}));
  // e_theta = r^2 dtheta
  const FieldPtr et = basis_field(2, "coord", DY);
  check_mv(hat_map(et).at(ctx), mv(2, {{DY, 1.44}}), 1e-14);
  check_mv(hat_inverse(hat_map(et))->at(ctx), reexpress(et, "grad")->at(ctx));
}
