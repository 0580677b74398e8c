#include "gcalc/error.hpp"
#include "gcalc/ga.hpp"
#include "helpers.hpp"

using namespace gcalc;

namespace {
constexpr Mask E1 = 0b001, E2 = 0b010, E3 = 0b100, E12 = 0b011, E23 = 0b110;
}

TEST_CASE("geometric product examples") {
  const Gram i3 = Gram::identity(3);
  check_mv(gp(Multivector::blade(3, E1), Multivector::blade(3, E2), i3), mv(3, {{E12, 1.0}}));

  SqMat<double> g(2);
  g(0, 0) = 1; g(0, 1) = 0.5; g(1, 0) = 0.5; g(1, 1) = 1;
  const Gram skew(g);
  check_mv(gp(Multivector::blade(2, E1), Multivector::blade(2, E2), skew), mv(2, {{0, 0.5}, {E12, 1.0}}));
  check_mv(gp_t(Multivector::blade(2, E1), Multivector::blade(2, E2), g), mv(2, {{0, 0.5}, {E12, 1.0}}));

  const Gram mink = Gram::diagonal({1, -1, -1, -1});
  check_mv(gp(Multivector::blade(4, E2), Multivector::blade(4, E2), mink), mv(4, {{0, -1.0}}));
}

TEST_CASE("wedge examples") {
  check_mv(wedge(Multivector::blade(3, E1), Multivector::blade(3, E2)), mv(3, {{E12, 1.0}}));
  check_mv(wedge(Multivector::blade(3, E1), Multivector::blade(3, E1)), Multivector(3));
  check_mv(wedge(mv(3, {{0, 1.0}, {E1, 1.0}}), Multivector::blade(3, E2)), mv(3, {{E2, 1.0}, {E12, 1.0}}));
}

TEST_CASE("dot examples") {
  const Gram i3 = Gram::identity(3);
  check_mv(dot(Multivector::blade(3, E12), Multivector::blade(3, E1), i3), Multivector(3));
  check_mv(dot(Multivector::blade(3, E1), Multivector::blade(3, E1), i3), mv(3, {{0, 1.0}}));
  check_mv(dot(Multivector::blade(3, E1), Multivector::blade(3, E12), i3), mv(3, {{E2, 1.0}}));
}

TEST_CASE("grade projection") {
  const Multivector a = mv(2, {{0, 1.0}, {E1, 1.0}, {E12, 1.0}});
  check_mv(grade(a, 1), mv(2, {{E1, 1.0}}));
  check_mv(grade(a, -1), Multivector(2));
  Multivector sum(2);
  for (int k = 0; k <= 2; ++k) sum += grade(a, k);
  check_mv(sum, a);
}

TEST_CASE("duality") {
  for (const auto& d : std::vector<std::vector<double>>{{1, 1}, {1, 1, 1}, {1, -1, -1, -1}, {-1, 2, 0.5}}) {
    const Gram g = Gram::diagonal(d);
    const int n = g.dim();
    const Multivector i = pseudoscalar(g);
    check_mv(dual(i, g), Multivector::scalar(n, 1.0));
    // 1* = I^-1 and I I^-1 = 1
    check_mv(gp(i, dual(Multivector::scalar(n, 1.0), g), g), Multivector::scalar(n, 1.0));
  }
  check_mv(dual(Multivector::blade(3, E1), Gram::identity(3)), mv(3, {{E23, -1.0}}));
}

TEST_CASE("reciprocal frames") {
  const SqMat<double> id = SqMat<double>::identity(2);
  const SqMat<double> r = reciprocal_frame(id, Gram::diagonal({1, 4}));
  CHECK(r(0, 0) == 1.0);
  CHECK(r(1, 1) == doctest::Approx(0.25));
  CHECK(r(0, 1) == 0.0);
  const SqMat<double> lor = reciprocal_frame(SqMat<double>::identity(4), Gram::diagonal({1, -1, -1, -1}));
  for (int i = 0; i < 4; ++i) CHECK(lor(i, i) == doctest::Approx(i == 0 ? 1.0 : -1.0));
  SqMat<double> bad(2);
  bad(0, 0) = 1;
  CHECK_THROWS_AS(reciprocal_frame(bad, Gram::identity(2)), SingularFrame);
}

TEST_CASE("singular Gram is rejected") {
  SqMat<double> g(2);
  g(0, 0) = 1; g(0, 1) = 1; g(1, 0) = 1; g(1, 1) = 1;
  CHECK_THROWS_AS(Gram{g}, SingularGram);
}

TEST_CASE("trace and rotation") {
  const Gram i3 = Gram::identity(3);
  const TraceRot id = trace_rot(LinMap{SqMat<double>::identity(3)}, i3);
  CHECK(id.trace == doctest::Approx(3.0));
  check_mv(id.rot, Multivector(3));

  SqMat<double> f(3);
  f(0, 1) = 0.7;
  f(1, 0) = -0.7;
  const TraceRot a = trace_rot(LinMap{f}, i3);
  CHECK(a.trace == 0.0);
  check_mv(a.rot, mv(3, {{E12, 1.4}}));

  SqMat<double> s(3);
  s(0, 2) = s(2, 0) = 0.3;
  check_mv(trace_rot(LinMap{s}, Gram::diagonal({1, -2, 3})).rot, Multivector(3));
}

TEST_CASE("trace/antisymmetric/traceless-symmetric split") {
  const Gram i3 = Gram::identity(3);
  const Tsa id = tsa_decompose(LinMap{SqMat<double>::identity(3)}, i3);
  CHECK(id.trace == doctest::Approx(3.0));
  CHECK(max_abs(id.antisym.f) == 0.0);
  CHECK(max_abs(id.traceless_sym.f) < 1e-15);

  SqMat<double> f(3);
  f(0, 1) = 0.7; f(1, 0) = -0.7; f(1, 2) = 0.2; f(2, 1) = -0.2;
  const Tsa a = tsa_decompose(LinMap{f}, i3);
  CHECK(a.trace == 0.0);
  CHECK(max_abs(a.traceless_sym.f) == 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a.antisym.f(i, j) == f(i, j));
}

TEST_CASE("a . rot f = 2 f-(a)") {
  SqMat<double> g(2);
  g(0, 0) = 2; g(0, 1) = 0.3; g(1, 0) = 0.3; g(1, 1) = -1;
  const Gram gram(g);
  SqMat<double> f(2);
  f(0, 0) = 0.4; f(0, 1) = 1.1; f(1, 0) = -0.2; f(1, 1) = 0.9;
  const std::vector<double> a{0.6, -1.3};
  const Multivector lhs = dot(Multivector::vector(2, a), trace_rot(LinMap{f}, gram).rot, gram);
  const std::vector<double> fm = apply(tsa_decompose(LinMap{f}, gram).antisym, gram, a);
  CHECK(lhs.c[E1] == doctest::Approx(2 * fm[0]).epsilon(1e-14));
  CHECK(lhs.c[E2] == doctest::Approx(2 * fm[1]).epsilon(1e-14));
}

TEST_CASE("blade keys") {
  CHECK(blade_key(0) == "");
  CHECK(blade_key(E12 | E3) == "1,2,3");
  CHECK(parse_blade_key("2,3", 3) == E23);
  CHECK_THROWS_AS(parse_blade_key("3,2", 3), ManifestError);
  CHECK_THROWS_AS(parse_blade_key("4", 3), ManifestError);
  CHECK_THROWS_AS(parse_blade_key("1,1", 3), ManifestError);
}
