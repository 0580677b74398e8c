#include "gcalc/charts.hpp"
#include "gcalc/cli.hpp"
#include "helpers.hpp"
#include "json.hpp"

using namespace gcalc;
using nlohmann::json;

TEST_CASE("eval") {
  cli::EvalArgs a;
  a.op = "grad";
  a.field = "phi: x^2+y^2";
  a.point = "x=1,y=2";
  const json j = json::parse(cli::cmd_eval(builtin_chart("euclid2"), a));
  CHECK(j == json::parse(R"({"1": 2, "2": 4})"));

  cli::EvalArgs m;
  m.op = "mdd";
  m.field = "e_phi";
  m.dir = "1=1";
  m.point = "theta=pi/4,phi=0";
  const json k = json::parse(cli::cmd_eval(builtin_chart("sphere2"), m));
  REQUIRE(k.size() == 1);
  CHECK(k["2"].get<double>() == doctest::Approx(1.0));

  m.field = "nope";
  CHECK_THROWS_AS(cli::cmd_eval(builtin_chart("sphere2"), m), UnknownIdentifier);
  m.field = "e_phi";
  m.point = "theta=1";
  CHECK_THROWS_AS(cli::cmd_eval(builtin_chart("sphere2"), m), ManifestError);
}

TEST_CASE("connection tables") {
  const json z = json::parse(cli::cmd_connection(builtin_chart("euclid3"), "", "x=1,y=2,z=3"));
  for (const char* t : {"gamma_bar", "chi", "gamma"})
    for (const auto& [k, v] : z[t].items()) CHECK(v.get<double>() == 0.0);
  const json s = json::parse(cli::cmd_connection(builtin_chart("sphere2"), "coord", "theta=pi/4,phi=0"));
  CHECK(s["gamma_bar"]["2,2,1"].get<double>() == doctest::Approx(-0.5));
  CHECK(s["frame"] == "coord");
  CHECK_FALSE(s.contains("gamma_mixed"));
  // Gamma_{phi phi}^theta = -sin cos, Gamma_{theta phi}^phi = cot
  const json m = json::parse(cli::cmd_connection(builtin_chart("sphere2"), "coord", "theta=pi/4,phi=0", true));
  CHECK(m["gamma_mixed"]["2,2,1"].get<double>() == doctest::Approx(-0.5));
  CHECK(m["gamma_mixed"]["1,2,2"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("maxwell") {
  const json q = json::parse(cli::cmd_maxwell("y:x^2/2", "t=0,x=1.5,y=0,z=0"));
  CHECK(q["F"] == json::parse(R"({"2,3": 1.5})"));
  CHECK(q["dF"].get<double>() == 0.0);
  CHECK(q["J"] == json::parse(R"({"3": 1})"));
  const json l = json::parse(cli::cmd_maxwell("3:x", "t=0,x=1.5,y=0,z=0"));
  CHECK(l["F"] == json::parse(R"({"2,3": 1})"));
  CHECK(l["J"] == json::object());
  const json zero = json::parse(cli::cmd_maxwell("", "t=0,x=1.5,y=0,z=0"));
  CHECK(zero["F"] == json::object());
  CHECK(zero["J"] == json::object());
  CHECK_THROWS_AS(cli::cmd_maxwell("w:x", "t=0,x=0,y=0,z=0"), ManifestError);
}

TEST_CASE("parse") {
  const json j = json::parse(cli::cmd_parse("x*y", "x,y", "x=2,y=3"));
  CHECK(j["value"] == 6.0);
  CHECK(j["grad"] == json::parse("[3, 2]"));
  CHECK(j["hess"] == json::parse("[0, 1, 1, 0]"));
  CHECK_THROWS_AS(cli::cmd_parse("sin(", "", ""), SyntaxError);
}

TEST_CASE("argument parsing") {
  const Chart s = builtin_chart("sphere2");
  const auto p = cli::parse_point(s, "phi=2*pi, theta=0.5");
  CHECK(p[0] == 0.5);
  CHECK(p[1] == doctest::Approx(2 * kPi));
  CHECK_THROWS_AS(cli::parse_point(s, "theta=1,theta=2,phi=0"), ManifestError);
  CHECK_THROWS_AS(cli::parse_point(s, "rho=1,phi=0"), UnknownIdentifier);
  CHECK(cli::parse_direction(3, "2=0.5") == std::vector<double>{0, 0.5, 0});
  CHECK_THROWS_AS(cli::parse_direction(2, "3=1"), ManifestError);
  CHECK_THROWS_AS(cli::load_chart("", ""), ManifestError);
}
