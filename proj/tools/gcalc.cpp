#include <iostream>

#include "CLI11.hpp"
#include "gcalc/charts.hpp"
#include "gcalc/cli.hpp"
#include "gcalc/error.hpp"

namespace {

constexpr int kInputError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace gcalc;
  CLI::App app{"Geometric calculus on charts: operators, connections, property checks"};
  app.require_subcommand(1);

  std::string chart_name;
  std::string manifest;
  auto add_chart = [&](CLI::App* sub) {
    sub->add_option("--chart", chart_name, "builtin chart (" + [] {
      std::string s;
      for (const auto& n : builtin_chart_names()) s += (s.empty() ? "" : ", ") + n;
      return s;
    }() + ")");
    sub->add_option("--manifest", manifest, "chart manifest (JSON)");
  };

  cli::EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate an operator on a field at a point");
  add_chart(eval);
  eval->add_option("--op", ev.op, "mdd|grad|div|curl|extd|codiff")->required();
  eval->add_option("--field", ev.field, "field name, or 'label: expr' for a scalar")->required();
  eval->add_option("--frame", ev.frame, "frame for the computation (default: the field's)");
  eval->add_option("--dir", ev.dir, "direction as 1-based frame components, \"1=0.5,2=1\"");
  eval->add_option("--point", ev.point, "\"name=value,...\"")->required();
  eval->add_flag("--levi-civita", ev.levi_civita, "ignore the chart contorsion");

  std::string conn_frame;
  std::string conn_point;
  bool conn_mixed = false;
  auto* conn = app.add_subcommand("connection", "connection coefficient tables at a point");
  add_chart(conn);
  conn->add_option("--frame", conn_frame, "frame (default coord)");
  conn->add_option("--point", conn_point, "\"name=value,...\"")->required();
  conn->add_flag("--mixed", conn_mixed, "also print Gamma_ij^k");

  CheckOptions copts;
  double tol = 0.0;
  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("--manifest", manifest, "extra chart for chart-generic checks");
  check->add_option("--suite", copts.suite, "expr|algebra|frames|connection|mdd|exterior|tensor|forms|maxwell|all");
  check->add_option("--samples", copts.samples, "samples per check and chart")->check(CLI::PositiveNumber);
  check->add_option("--seed", copts.seed, "random seed");
  auto* tol_opt = check->add_option("--tol", tol, "replace every per-check tolerance");

  std::string potential;
  std::string mx_point;
  auto* mx = app.add_subcommand("maxwell", "F, grad^F and J for a potential on minkowski4");
  mx->add_option("--potential", potential, "\"key:expr,...\" over dx^mu (key: index or coordinate)")->required();
  mx->add_option("--point", mx_point, "\"t=..,x=..,y=..,z=..\"")->required();

  std::string text;
  std::string coords;
  std::string parse_point;
  auto* parse = app.add_subcommand("parse", "canonical form, and jets at a point");
  parse->add_option("expr", text, "expression")->required();
  parse->add_option("--coords", coords, "coordinate names (default x,y,z)");
  parse->add_option("--point", parse_point, "\"name=value,...\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*eval) {
      std::cout << cli::cmd_eval(cli::load_chart(chart_name, manifest), ev);
    } else if (*conn) {
      std::cout << cli::cmd_connection(cli::load_chart(chart_name, manifest), conn_frame, conn_point, conn_mixed);
    } else if (*check) {
      if (!manifest.empty()) copts.manifest = load_manifest_file(manifest);
      if (tol_opt->count() > 0) copts.tol = tol;
      const Report r = run_checks(copts);
      std::cout << r.to_json();
      if (!r.passed()) {
        for (const auto& c : r.checks)
          if (!c.passed) std::cerr << "FAIL " << c.suite << "." << c.name << (c.note.empty() ? "" : ": " + c.note) << "\n";
        return 1;
      }
    } else if (*mx) {
      std::cout << cli::cmd_maxwell(potential, mx_point);
    } else if (*parse) {
      std::cout << cli::cmd_parse(text, coords, parse_point);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
