// One line per acceptance criterion, from a single seeded run of every suite.
// A criterion passes when each listed check passed and its deviation is
// within the criterion's own bound.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gcalc/checks.hpp"

namespace {

struct Item {
  const char* check;  // suite.name
  double tol;
};

struct Criterion {
  int id;
  const char* title;
  std::vector<Item> items;
};

const gcalc::CheckResult* find(const gcalc::Report& r, const std::string& key) {
  for (const auto& c : r.checks)
    if (c.suite + "." + c.name == key) return &c;
  return nullptr;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "algebra identities (n=2..4, indefinite Grams)",
       {{"algebra.fundamental_identity", 1e-10}, {"algebra.associativity", 1e-10}, {"algebra.duality_relations", 1e-10},
        {"algebra.pseudoscalar_dual", 1e-10}}},
      {2, "connection coefficients",
       {{"connection.sphere2_christoffel", 1e-10}, {"connection.metric_compatibility", 1e-10},
        {"connection.torsion_identity", 1e-10}}},
      {3, "multivector directional derivative",
       {{"mdd.product_rule", 1e-9}, {"mdd.grade_preservation", 1e-9}, {"mdd.metric_compatibility", 1e-9},
        {"mdd.dot_wedge_compatibility", 1e-9}, {"mdd.pseudoscalar_constant", 1e-9},
        {"mdd.gradient_frame_independence", 1e-9}}},
      {4, "exterior derivative",
       {{"exterior.d_squared", 1e-8}, {"exterior.graded_leibniz", 1e-9}, {"exterior.metric_independence", 1e-10}}},
      {5, "tensor derivative",
       {{"tensor.derivative_chain_vs_components", 1e-9}, {"tensor.metric_derivative_zero", 1e-10},
        {"tensor.derivative_commutes_with_contraction", 1e-9}, {"tensor.contorsion_tensor", 1e-10}}},
      {6, "forms equivalence",
       {{"forms.hat_linearity", 1e-9}, {"forms.hat_wedge", 1e-9}, {"forms.hat_exterior_derivative", 1e-9}}},
      {7, "Maxwell, A = (x^2/2) dy", {{"maxwell.quadratic_potential", 1e-10}}},
      {8, "trace/antisymmetric/symmetric split",
       {{"algebra.tsa_reconstruction", 1e-12}, {"algebra.rotation_constant", 1e-10}}},
      {9, "jets vs finite differences", {{"expr.jet_vs_finite_difference", 1e-6}}},
  };

  gcalc::CheckOptions opts;  // all suites, 64 samples, seed 42
  const auto t0 = std::chrono::steady_clock::now();
  const gcalc::Report report = gcalc::run_checks(opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int failed = 0;
  for (const auto& cr : criteria) {
    bool ok = true;
    double worst = 0.0;  // deviation / bound
    std::string detail;
    for (const auto& it : cr.items) {
      const gcalc::CheckResult* c = find(report, it.check);
      if (!c) {
        ok = false;
        detail += std::string(" missing:") + it.check;
        continue;
      }
      const bool good = c->passed && c->max_deviation <= it.tol;
      if (!good) {
        ok = false;
        detail += std::string(" failed:") + it.check;
        if (!c->note.empty()) detail += "(" + c->note + ")";
      }
      if (it.tol > 0) worst = std::max(worst, c->max_deviation / it.tol);
    }
    if (cr.id == 8) {
      if (const auto* c = find(report, "algebra.rotation_constant"); c && c->measured.count("c"))
        detail += " c=" + std::to_string(c->measured.at("c"));
    }
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (worst deviation/bound %.3g)%s\n", ok ? "PASS" : "FAIL", cr.id, cr.title, worst,
                detail.c_str());
  }
  std::printf("%s all suites: %zu checks, %.2f s\n", report.passed() ? "PASS" : "FAIL", report.checks.size(), secs);
  if (!report.passed()) ++failed;
  return failed == 0 ? 0 : 1;
}
