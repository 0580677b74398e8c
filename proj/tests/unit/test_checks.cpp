#include "gcalc/checks.hpp"
#include "helpers.hpp"
#include "json.hpp"

using namespace gcalc;

TEST_CASE("reports are deterministic under a seed") {
  CheckOptions o;
  o.suite = "algebra";
  o.samples = 2;
  o.seed = 7;
  const std::string a = run_checks(o).to_json();
  const std::string b = run_checks(o).to_json();
  CHECK(a == b);
  o.seed = 8;
  CHECK(run_checks(o).to_json() != a);
}

TEST_CASE("a check's sample stream does not depend on the suite selection") {
  CheckOptions one;
  one.suite = "forms";
  one.samples = 2;
  CheckOptions all = one;
  all.suite = "all";
  const Report r1 = run_checks(one);
  const Report r2 = run_checks(all);
  for (const auto& c : r1.checks) {
    bool found = false;
    for (const auto& d : r2.checks)
      if (d.suite == c.suite && d.name == c.name) {
        found = true;
        CHECK(d.max_deviation == c.max_deviation);
      }
    CHECK(found);
  }
}

TEST_CASE("tolerance override and report shape") {
  CheckOptions o;
  o.suite = "maxwell";
  o.samples = 1;
  o.tol = 1e-30;
  const Report r = run_checks(o);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "maxwell");
  CHECK(j["seed"] == 42);
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) CHECK(c["tolerance"] == 1e-30);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("bad options") {
  CheckOptions o;
  o.suite = "nonsense";
  CHECK_THROWS_AS(run_checks(o), ManifestError);
  o.suite = "all";
  o.samples = 0;
  CHECK_THROWS_AS(run_checks(o), ManifestError);
}
