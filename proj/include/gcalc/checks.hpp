#pragma once

// Property suites: every identity the engine promises, measured on seeded
// random inputs, collected into a deterministic JSON report.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcalc/manifold.hpp"

namespace gcalc {

struct CheckResult {
  std::string suite;
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int samples = 0;
  bool passed = false;
  std::string note;                       // error text when the check threw
  std::map<std::string, double> measured;  // e.g. fitted constants
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
  std::string to_json() const;
};

struct CheckOptions {
  std::string suite = "all";
  int samples = 64;
  std::uint64_t seed = 42;
  std::optional<double> tol;                // replaces every per-check tolerance
  std::optional<Chart> manifest;            // extra chart for chart-generic checks
};


const std::vector<std::string>& suite_names();  // without "all"
Report run_checks(const CheckOptions& opts);

}  // namespace gcalc
