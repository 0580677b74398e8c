#include "gcalc/charts.hpp"
#include "gcalc/manifold.hpp"
#include "helpers.hpp"

using namespace gcalc;

TEST_CASE("sphere2 coordinate frame at pi/4") {
  const Chart s = builtin_chart("sphere2");
  const double p[] = {kPi / 4, 0.3};
  const FrameAt f = eval_frame(s, "coord", p);
  CHECK(f.g(0, 0) == doctest::Approx(1.0));
  CHECK(f.g(1, 1) == doctest::Approx(0.5));
  CHECK(f.g(0, 1) == 0.0);
  for (double l : f.L) CHECK(l == 0.0);
}

TEST_CASE("sphere2 orthonormal frame at pi/4") {
  const Chart s = builtin_chart("sphere2");
  const double p[] = {kPi / 4, 0.3};
  const FrameAt f = eval_frame(s, "orthonormal", p);
  CHECK(f.g(0, 0) == doctest::Approx(1.0));
  CHECK(f.g(1, 1) == doctest::Approx(1.0));
  CHECK(f.L[f.at(0, 1, 1)] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(f.L[f.at(1, 0, 1)] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.L[f.at(0, 1, 0)] == doctest::Approx(0.0));
  // [e1, e2] = -cot(theta) e2 in coordinate components
  CHECK(f.bracket[f.at(0, 1, 1)] == doctest::Approx(-1.0 / std::sin(kPi / 4)).epsilon(1e-12));
}

TEST_CASE("degenerate frame") {
  Chart c = builtin_chart("euclid2");
  c.frames["bad"] = parse_matrix({{"1", "0"}, {"0", "0"}}, c.coords);
  const double p[] = {1.0, 2.0};
  CHECK_THROWS_AS(eval_frame(c, "bad", p), SingularFrame);
}

TEST_CASE("directional derivative of a scalar") {
  const Chart e2 = builtin_chart("euclid2");
  const double p[] = {1.0, 2.0};
  const FrameAt f = eval_frame(e2, "coord", p);
  const Expr phi = e2.fields.at("phi").components.at(0);
  const double ex[] = {1.0, 0.0};
  const double zero[] = {0.0, 0.0};
  CHECK(dirderiv_scalar(e2, f, p, ex, phi) == doctest::Approx(2.0));
  CHECK(dirderiv_scalar(e2, f, p, zero, phi) == 0.0);

  const Chart pol = builtin_chart("polar2");
  const double q[] = {1.3, 0.4};
  const double et[] = {0.0, 1.0};
  CHECK(dirderiv_scalar(pol, eval_frame(pol, "coord", q), q, et, pol.fields.at("phi").components.at(0)) == 0.0);
}

TEST_CASE("Lie bracket") {
  const Chart e2 = builtin_chart("euclid2");
  const double p[] = {0.7, -0.2};
  const auto x = [&](const char* t) { return expr::parse(t, e2.coords); };
  const std::vector<Expr> a{x("1"), x("0")};
  const std::vector<Expr> b{x("0"), x("x")};
  const auto r = lie_bracket(e2, a, b, p);
  CHECK(r[0] == 0.0);
  CHECK(r[1] == doctest::Approx(1.0));
  const std::vector<Expr> w{x("x*y"), x("sin(x)")};
  for (double v : lie_bracket(e2, w, w, p)) CHECK(v == 0.0);
  const std::vector<Expr> ey{x("0"), x("1")};
  for (double v : lie_bracket(e2, a, ey, p)) CHECK(v == 0.0);
}

TEST_CASE("frame classification") {
  const Chart s = builtin_chart("sphere2");
  const double p[] = {0.9, 0.1};
  const FrameClass coord = classify_frame(eval_frame(s, "coord", p));
  CHECK(coord.holonomic);
  CHECK_FALSE(coord.orthonormal);
  const FrameClass on = classify_frame(eval_frame(s, "orthonormal", p));
  CHECK(on.orthonormal);
  CHECK_FALSE(on.holonomic);
  CHECK(on.signature == std::vector<int>{1, 1});

  const Chart e3 = builtin_chart("euclid3");
  const double q[] = {0.1, 0.2, 0.3};
  const FrameClass c3 = classify_frame(eval_frame(e3, "coord", q));
  CHECK(c3.holonomic);
  CHECK(c3.orthonormal);

  const Chart m = builtin_chart("minkowski4");
  const double t[] = {0, 0, 0, 0};
  CHECK(classify_frame(eval_frame(m, "coord", t)).signature == std::vector<int>{1, -1, -1, -1});
}

TEST_CASE("gradient basis") {
  const double p[] = {0.5, -1.5};
  const SqMat<double> e = gradient_basis(builtin_chart("euclid2"), p);
  CHECK(e(0, 0) == 1.0);
  CHECK(e(1, 1) == 1.0);
  CHECK(e(0, 1) == 0.0);
  const double q[] = {2.0, 0.4};
  const SqMat<double> r = gradient_basis(builtin_chart("polar2"), q);
  CHECK(r(0, 0) == doctest::Approx(1.0));
  CHECK(r(0, 1) == 0.0);
  CHECK(r(1, 0) == 0.0);
  CHECK(r(1, 1) == doctest::Approx(0.25));
}

TEST_CASE("manifest loading") {
  const Chart c = load_manifest_text(R"({
    "name": "cone",
    "coordinates": ["r", "t"],
    "metric": [["1", 0], [0, "r^2/4"]],
    "frames": {"plain": "identity", "half": [["1", "0"], ["0", "2/r"]]},
    "fields": {"f": {"frame": "coord", "components": {"": "r*t", "2": "1"}}},
    "domain": {"r": [0.5, 1.5]}
  })");
  CHECK(c.name == "cone");
  CHECK(c.dim() == 2);
  CHECK(c.has_frame("coord"));
  CHECK(c.has_frame("grad"));
  CHECK(c.has_frame("half"));
  CHECK(c.domain[0].first == 0.5);
  CHECK(c.fields.at("f").components.size() == 2);
  const double p[] = {1.0, 0.2};
  CHECK(classify_frame(eval_frame(c, "half", p)).orthonormal);

  CHECK_THROWS_AS(load_manifest_text("{"), ManifestError);
  CHECK_THROWS_AS(load_manifest_text(R"({"coordinates": ["x"]})"), ManifestError);
  CHECK_THROWS_AS(load_manifest_text(R"({"coordinates": ["x","y"], "metric": [["1","0"],["1","1"]]})"), Error);
  CHECK_THROWS_AS(load_manifest_text(R"({"coordinates": ["x"], "metric": [["q"]]})"), UnknownIdentifier);
  CHECK_THROWS_AS(builtin_chart("torus"), ManifestError);
}
