#include "gcalc/charts.hpp"
#include "gcalc/tensor.hpp"
#include "helpers.hpp"

using namespace gcalc;

namespace {
constexpr Mask E1 = 0b001, E2 = 0b010, E12 = 0b011;

Multivector vec(int n, std::vector<double> v) { return Multivector::vector(n, v); }

FieldDef vector_def(const Chart& c, const std::vector<std::string>& comps) {
  FieldDef d{"coord", {}};
  for (std::size_t i = 0; i < comps.size(); ++i) d.components[Mask{1} << i] = expr::parse(comps[i], c.coords);
  return d;
}
}  // namespace

TEST_CASE("metric tensor and zero tensor") {
  const Chart s = builtin_chart("sphere2");
  PointContext ctx(s, {0.7, 0.2});
  const TensorField g = metric_tensor(s, "coord");
  const Multivector a = vec(2, {0.3, -1.1});
  const Multivector b = vec(2, {1.4, 0.5});
  const double sin2 = std::pow(std::sin(0.7), 2);
  CHECK(tensor_eval(g, {a, b}, ctx).c[0] == doctest::Approx(0.3 * 1.4 - 1.1 * 0.5 * sin2).epsilon(1e-14));
  const TensorField z = zero_tensor(2, "coord", g.signature());
  check_mv(tensor_eval(z, {a, b}, ctx), Multivector(2));
  CHECK_THROWS_AS(tensor_eval(g, {a}, ctx), Error);
  CHECK_THROWS_AS(tensor_eval(g, {a, Multivector::blade(2, E12)}, ctx), GradeMismatch);
}

TEST_CASE("tensor algebra") {
  const Chart e3 = builtin_chart("euclid3");
  PointContext ctx(e3, {0.1, 0.2, 0.3});
  const FieldDef a = vector_def(e3, {"1", "2", "-1"});
  const FieldDef b = vector_def(e3, {"0.5", "0", "3"});
  const TensorField ab = tensor_product(tensor_conjugate(e3, a), tensor_conjugate(e3, b));
  const double av[] = {1, 2, -1}, bv[] = {0.5, 0, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Multivector v = tensor_eval(ab, {Multivector::blade(3, Mask{1} << i), Multivector::blade(3, Mask{1} << j)}, ctx);
      CHECK(v.c[0] == doctest::Approx(av[i] * bv[j]));
    }
  const std::vector<Multivector> args{vec(3, {0.2, 0.1, -0.4}), vec(3, {1, 1, 1})};
  const double base = tensor_eval(ab, args, ctx).c[0];
  const TensorField z = zero_tensor(3, "coord", ab.signature());
  CHECK(tensor_eval(tensor_add(ab, z), args, ctx).c[0] == base);
  CHECK(tensor_eval(tensor_scale(ab, 2.0), args, ctx).c[0] == doctest::Approx(2 * base));

  CHECK(contract(metric_tensor(e3, "coord"), 0, 1, {}, ctx).c[0] == doctest::Approx(3.0));
  CHECK(contract(ab, 0, 1, {}, ctx).c[0] == doctest::Approx(0.5 - 3.0));
  CHECK_THROWS_AS(contract(ab, 0, 0, {}, ctx), SlotGradeError);
  const FieldDef biv{"coord", {{E12, expr::Expr::number(1.0)}}};
  CHECK_THROWS_AS(contract(tensor_conjugate_breve(e3, biv), 0, 1, {}, ctx), SlotGradeError);
}

TEST_CASE("contraction is frame independent") {
  const Chart s = builtin_chart("sphere2");
  PointContext ctx(s, {1.1, 0.4});
  const FieldDef b = vector_def(s, {"cos(phi)", "theta"});
  const FieldDef c = vector_def(s, {"1+theta", "sin(phi)"});
  const TensorField coord = tensor_product(tensor_conjugate(s, b), tensor_conjugate(s, c));
  const TensorField g_on = metric_tensor(s, "orthonormal");
  const double vc = contract(coord, 0, 1, {}, ctx).c[0];
  CHECK(contract(metric_tensor(s, "coord"), 0, 1, {}, ctx).c[0] == doctest::Approx(2.0));
  CHECK(contract(g_on, 0, 1, {}, ctx).c[0] == doctest::Approx(2.0));
  // b . c directly
  const double t = 1.1, ph = 0.4;
  CHECK(vc == doctest::Approx(std::cos(ph) * (1 + t) + t * std::sin(ph) * std::pow(std::sin(t), 2)).epsilon(1e-13));
}

TEST_CASE("conjugates") {
  const Chart e3 = builtin_chart("euclid3");
  PointContext ctx(e3, {0.1, 0.2, 0.3});
  const FieldDef biv{"coord", {{E12, expr::Expr::number(1.0)}}};
  const TensorField h = tensor_conjugate(e3, biv);
  CHECK(tensor_eval(h, {Multivector::blade(3, E1), Multivector::blade(3, E2)}, ctx).c[0] == doctest::Approx(1.0));
  CHECK(tensor_eval(h, {Multivector::blade(3, E2), Multivector::blade(3, E1)}, ctx).c[0] == doctest::Approx(-1.0));

  const Chart pol = builtin_chart("polar2");
  PointContext pc(pol, {1.5, 0.3});
  for (int i = 0; i < 2; ++i) {
    // e^i = g^{ii} e_i in the coordinate frame
    const double gii = i == 0 ? 1.0 : 1.0 / (1.5 * 1.5);
    const FieldDef ei{"coord", {{Mask{1} << i, expr::Expr::number(gii)}}};
    const TensorField hi = tensor_conjugate(pol, ei);
    for (int j = 0; j < 2; ++j)
      CHECK(tensor_eval(hi, {Multivector::blade(2, Mask{1} << j)}, pc).c[0] == doctest::Approx(i == j ? 1.0 : 0.0));
  }
  const FieldDef b = vector_def(pol, {"r", "theta"});
  const Multivector a = vec(2, {0.7, -0.2});
  CHECK(tensor_eval(tensor_conjugate(pol, b), {a}, pc).c[0] ==
        doctest::Approx(1.5 * 0.7 - 0.3 * 0.2 * 1.5 * 1.5).epsilon(1e-14));
  CHECK(tensor_eval(tensor_conjugate_breve(pol, b), {a}, pc).c[0] ==
        doctest::Approx(1.5 * 0.7 - 0.3 * 0.2 * 1.5 * 1.5).epsilon(1e-14));
}

TEST_CASE("tensor derivatives") {
  const Chart s = builtin_chart("sphere2");
  PointContext ctx(s, {0.9, -0.5});
  for (double v : tensor_derivative_components(ctx, metric_tensor(s, "coord"))) CHECK(std::abs(v) < 1e-13);

  const Chart e2 = builtin_chart("euclid2");
  PointContext flat(e2, {0.4, 0.8});
  TensorField t(2, "coord", TensorSignature{{1, 1}, 0});
  t.set(TensorKey{{E1, E2}, 0}, expr::parse("x^2*y", e2.coords));
  t.set(TensorKey{{E2, E2}, 0}, expr::Expr::number(3.0));
  const std::vector<double> d = tensor_derivative_components(flat, t);
  // index (i, j, k) row-major
  CHECK(d[0 * 4 + 0 * 2 + 1] == doctest::Approx(2 * 0.4 * 0.8));
  CHECK(d[1 * 4 + 0 * 2 + 1] == doctest::Approx(0.16));
  CHECK(d[0 * 4 + 1 * 2 + 1] == 0.0);
  CHECK(d[1 * 4 + 1 * 2 + 1] == 0.0);

  const FieldDef c{"coord", {{E12, expr::Expr::number(2.0)}}};
  const double a[] = {0.3, 1.0};
  CHECK(conjugate_derivative_check(flat, c, a, {vec(2, {1, 0}), vec(2, {0.5, 2})}) < 1e-14);
}
