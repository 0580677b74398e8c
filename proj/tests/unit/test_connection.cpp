#include "gcalc/charts.hpp"
#include "gcalc/connection.hpp"
#include "gcalc/field.hpp"
#include "helpers.hpp"

using namespace gcalc;

namespace {
double at3(const std::vector<double>& v, int n, int i, int j, int k) { return v[static_cast<std::size_t>((i * n + j) * n + k)]; }
}  // namespace

TEST_CASE("flat Cartesian connection vanishes") {
  const double p[] = {0.3, -1.0, 2.0};
  const ConnectionAt c = connection_at(builtin_chart("euclid3"), "coord", p);
  for (double v : c.gamma_bar) CHECK(v == 0.0);
  for (double v : reciprocal_gamma(c)) CHECK(v == 0.0);
}

TEST_CASE("sphere2 Christoffel symbols at pi/4") {
  const double p[] = {kPi / 4, 1.0};
  const ConnectionAt c = connection_at(builtin_chart("sphere2"), "coord", p);
  // theta = 0, phi = 1
  CHECK(at3(c.gamma_bar, 2, 1, 1, 0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(at3(c.gamma_bar, 2, 0, 1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(at3(c.gamma_bar, 2, 1, 0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(at3(c.gamma_bar, 2, 0, 0, 0) == 0.0);
  const std::vector<double> r = reciprocal_gamma(c);
  CHECK(at3(r, 2, 0, 1, 1) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("contorsion must be antisymmetric in its last two slots") {
  const Chart s = builtin_chart("sphere2");
  const double p[] = {1.0, 0.5};
  const Chart bad = s.with_contorsion({{0, 1, 1, expr::Expr::number(0.3)}});
  CHECK_THROWS_WITH_AS(connection_at(bad, "coord", p), "contorsion antisymmetry violated", InvalidContorsion);

  const Chart good = s.with_contorsion({{0, 0, 1, expr::Expr::number(0.3)}, {0, 1, 0, expr::Expr::number(-0.3)}});
  const ConnectionAt c = connection_at(good, "coord", p);
  CHECK(at3(c.chi, 2, 0, 0, 1) == doctest::Approx(0.3));
  CHECK(at3(c.gamma, 2, 0, 0, 1) == doctest::Approx(at3(c.gamma_bar, 2, 0, 0, 1) + 0.3));
  const ConnectionAt lc = connection_at(good, "coord", p, Conn::LeviCivita);
  for (double v : lc.chi) CHECK(v == 0.0);
}

TEST_CASE("torsion") {
  const Chart s = builtin_chart("sphere2");
  const double p[] = {0.8, 0.1};
  const auto x = [&](const char* t) { return expr::parse(t, s.coords); };
  const FieldPtr a = expr_field(2, "coord", {{0b01, x("cos(phi)")}, {0b10, x("theta^2")}});
  const FieldPtr b = expr_field(2, "coord", {{0b01, x("1+theta*phi")}, {0b10, x("sin(theta)")}});
  for (double v : torsion(s, a, b, p)) CHECK(std::abs(v) < 1e-12);
  for (double v : torsion(s, a, a, p)) CHECK(std::abs(v) < 1e-15);

  // With contorsion, tau(e_i, e_j) = (chi_ijk - chi_jik) e^k.
  const Chart t = s.with_contorsion({{0, 0, 1, expr::Expr::number(0.3)}, {0, 1, 0, expr::Expr::number(-0.3)}});
  const FieldPtr e1 = basis_field(2, "coord", 0b01);
  const FieldPtr e2 = basis_field(2, "coord", 0b10);
  const std::vector<double> tau = torsion(t, e1, e2, p);
  // chi_12k - chi_21k: k=1 gives -0.3, k=2 gives 0; raise with g^{kk}.
  CHECK(tau[0] == doctest::Approx(-0.3));
  CHECK(std::abs(tau[1]) < 1e-15);
}

TEST_CASE("contorsion operator") {
  const Chart s = builtin_chart("sphere2");
  const double p[] = {0.8, 0.1};
  const double a[] = {0.4, -1.2};
  const FieldPtr f = expr_field(2, "coord", {{0b01, expr::parse("theta", s.coords)}});
  check_mv(contorsion_apply(s, a, f, p), Multivector(2));
}
