#include <algorithm>

#include "common.hpp"
#include "gcalc/json_out.hpp"

namespace gcalc {

namespace checks {

void Suite::run(const std::string& check, double tol, const std::function<void(Rng&, Acc&)>& body) {
  CheckResult r;
  r.suite = name_;
  r.name = check;
  r.tolerance = opts_.tol ? *opts_.tol : tol;
  Rng rng = Rng::derive(opts_.seed, name_ + "." + check);
  Acc acc;
  try {
    body(rng, acc);
    r.passed = acc.dev <= r.tolerance;
  } catch (const std::exception& e) {
    r.note = e.what();
    r.passed = false;
  }
  r.max_deviation = acc.dev;
  r.samples = acc.samples;
  r.measured = acc.measured;
  report_.checks.push_back(std::move(r));
}

std::vector<Chart> charts_for(const CheckOptions& opts, const std::vector<std::string>& builtin) {
  std::vector<Chart> out;
  for (const auto& name : builtin) out.push_back(builtin_chart(name));
  if (opts.manifest) out.push_back(*opts.manifest);
  return out;
}

std::vector<ChartFrame> frames_of(const std::vector<Chart>& charts) {
  std::vector<ChartFrame> out;
  for (const auto& c : charts)
    for (const auto& [name, m] : c.frames)
      if (name != "grad") out.push_back({&c, name});
  return out;
}

FieldPtr random_field(Rng& rng, const Chart& chart, const std::string& frame, int k) {
  return field_from_def(chart, random_field_def(rng, chart, frame, k));
}

}  // namespace checks

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"expr",     "algebra", "frames", "connection", "mdd",
                                              "exterior", "tensor",  "forms",  "maxwell"};
  return names;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string Report::to_json() const {
  std::string list;
  for (const auto& c : checks) {
    json_out::Object o;
    o.str("suite", c.suite)
        .str("name", c.name)
        .str("status", c.passed ? "pass" : "fail")
        .num("max_deviation", c.max_deviation)
        .num("tolerance", c.tolerance)
        .integer("samples", c.samples)
        .integer("seed", static_cast<long long>(seed));
    if (!c.measured.empty()) {
      json_out::Object m;
      for (const auto& [k, v] : c.measured) m.num(k, v);
      o.raw("measured", m.done());
    }
    if (!c.note.empty()) o.str("note", c.note);
    if (!list.empty()) list += ",\n    ";
    list += o.done();
  }
  json_out::Object top;
  top.str("suite", suite)
      .integer("seed", static_cast<long long>(seed))
      .integer("samples", samples)
      .boolean("passed", passed())
      .raw("checks", "[\n    " + list + "\n  ]");
  return top.done() + "\n";
}

Report run_checks(const CheckOptions& opts) {
  const auto& names = suite_names();
  if (opts.suite != "all" && std::find(names.begin(), names.end(), opts.suite) == names.end()) {
    throw ManifestError("unknown suite: " + opts.suite);
  }
  if (opts.samples < 1) throw ManifestError("samples must be positive");
  Report report;
  report.suite = opts.suite;
  report.seed = opts.seed;
  report.samples = opts.samples;
  using Fn = void (*)(checks::Suite&);
  const std::vector<std::pair<std::string, Fn>> table{
      {"expr", checks::expr_suite},         {"algebra", checks::algebra_suite}, {"frames", checks::frames_suite},
      {"connection", checks::connection_suite}, {"mdd", checks::mdd_suite},  {"exterior", checks::exterior_suite},
      {"tensor", checks::tensor_suite},     {"forms", checks::forms_suite},     {"maxwell", checks::maxwell_suite}};
  for (const auto& [name, fn] : table) {
    if (opts.suite != "all" && opts.suite != name) continue;
    checks::Suite s(opts, report, name);
    fn(s);
  }
  return report;
}

}  // namespace gcalc
