#pragma once

// Command implementations behind the gcalc executable. Each returns the JSON
// document printed on stdout; input problems surface as gcalc::Error.

#include <optional>
#include <string>
#include <vector>

#include "gcalc/checks.hpp"
#include "gcalc/manifold.hpp"

namespace gcalc::cli {

// Builtin name or manifest path (exactly one).
Chart load_chart(const std::string& builtin, const std::string& manifest_path);

// "name=value,..." with constant-expression values (pi allowed); every
// coordinate must be given.
std::vector<double> parse_point(const Chart& chart, const std::string& text);
// "i=v,..." with 1-based frame indices; absent components are 0.
std::vector<double> parse_direction(int n, const std::string& text);
// "key:expr,..." where key is a 1-based index or a coordinate name.
std::map<Mask, Expr> parse_potential(const Chart& chart, const std::string& text);

struct EvalArgs {
  std::string op;     // mdd grad div curl extd codiff
  std::string field;  // chart field name, or "label: expr" for an inline scalar
  std::string frame;  // empty: the field's own frame
  std::string dir;
  std::string point;
  bool levi_civita = false;
};
std::string cmd_eval(const Chart& chart, const EvalArgs& args);
// mixed adds Gamma_ij^k (last index raised).
std::string cmd_connection(const Chart& chart, const std::string& frame, const std::string& point, bool mixed = false);
std::string cmd_maxwell(const std::string& potential, const std::string& point);
std::string cmd_parse(const std::string& text, const std::string& coords, const std::string& point);

}  // namespace gcalc::cli
