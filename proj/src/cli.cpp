#include "gcalc/cli.hpp"

#include <sstream>

#include "gcalc/charts.hpp"
#include "gcalc/connection.hpp"
#include "gcalc/field.hpp"
#include "gcalc/json_out.hpp"
#include "gcalc/maxwell.hpp"

namespace gcalc::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(trim(part));
  return out;
}

std::pair<std::string, std::string> key_value(const std::string& item, char sep) {
  const auto pos = item.find(sep);
  if (pos == std::string::npos) throw ManifestError("expected key" + std::string(1, sep) + "value, got '" + item + "'");
  return {trim(item.substr(0, pos)), trim(item.substr(pos + 1))};
}

double constant(const std::string& text) {
  static const std::vector<std::string> names{"pi"};
  const Expr e = expr::parse(text, names);
  const double pi = 3.141592653589793;
  return expr::evaluate<double>(e, std::span<const double>(&pi, 1));
}

int index_1based(const std::string& key, int n) {
  std::size_t used = 0;
  int i = 0;
  try {
    i = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || i < 1 || i > n) throw ManifestError("index out of range: '" + key + "'");
  return i - 1;
}

std::string json_vector(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + json_out::number(v[i]);
  return out + "]";
}

std::string json_table(const std::vector<double>& v, int n) {
  json_out::Object o;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::string key = std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1);
        o.num(key, v[static_cast<std::size_t>((i * n + j) * n + k)]);
      }
  return o.done();
}

}  // namespace

Chart load_chart(const std::string& builtin, const std::string& manifest_path) {
  if (!builtin.empty() && !manifest_path.empty()) throw ManifestError("give either --chart or --manifest, not both");
  if (!manifest_path.empty()) return load_manifest_file(manifest_path);
  if (builtin.empty()) throw ManifestError("a chart is required (--chart NAME or --manifest FILE)");
  return builtin_chart(builtin);
}

std::vector<double> parse_point(const Chart& chart, const std::string& text) {
  const int n = chart.dim();
  std::vector<double> p(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& item : split(text, ',')) {
    const auto [name, value] = key_value(item, '=');
    int idx = -1;
    for (int i = 0; i < n; ++i)
      if (chart.coords[i] == name) idx = i;
    if (idx < 0) throw UnknownIdentifier("unknown coordinate '" + name + "'");
    if (seen[idx]) throw ManifestError("coordinate given twice: '" + name + "'");
    p[idx] = constant(value);
    seen[idx] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw ManifestError("point is missing coordinate '" + chart.coords[i] + "'");
  return p;
}

std::vector<double> parse_direction(int n, const std::string& text) {
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  for (const auto& item : split(text, ',')) {
    const auto [key, value] = key_value(item, '=');
    d[index_1based(key, n)] = constant(value);
  }
  return d;
}

std::map<Mask, Expr> parse_potential(const Chart& chart, const std::string& text) {
  const int n = chart.dim();
  std::map<Mask, Expr> out;
  for (const auto& item : split(text, ',')) {
    const auto [key, value] = key_value(item, ':');
    int idx = -1;
    for (int i = 0; i < n; ++i)
      if (chart.coords[i] == key) idx = i;
    if (idx < 0) idx = index_1based(key, n);
    out[Mask{1} << idx] = expr::parse(value, chart.coords);
  }
  return out;
}

std::string cmd_eval(const Chart& chart, const EvalArgs& args) {
  const int n = chart.dim();
  FieldPtr field;
  const auto colon = args.field.find(':');
  if (colon != std::string::npos) {
    field = expr_field(n, "coord", {{0, expr::parse(trim(args.field.substr(colon + 1)), chart.coords)}});
  } else {
    auto it = chart.fields.find(args.field);
    if (it == chart.fields.end()) throw UnknownIdentifier("unknown field '" + args.field + "'");
    field = field_from_def(chart, it->second);
  }
  if (!args.frame.empty() && args.frame != field->frame()) {
    chart.frame(args.frame);
    field = reexpress(field, args.frame);
  }
  const Conn kind = args.levi_civita ? Conn::LeviCivita : Conn::Chart;
  PointContext ctx(chart, parse_point(chart, args.point));
  FieldPtr out;
  if (args.op == "mdd") {
    if (trim(args.dir).empty()) throw ManifestError("--dir is required for mdd");
    out = mdd_field(field, parse_direction(n, args.dir), kind);
  } else if (args.op == "grad") {
    out = gradient_field(field, kind);
  } else if (args.op == "div") {
    out = divergence_field(field, kind);
  } else if (args.op == "curl") {
    out = curl_field(field, kind);
  } else if (args.op == "extd") {
    out = ext_d_field(field);
  } else if (args.op == "codiff") {
    out = divergence_field(field, Conn::LeviCivita);
  } else {
    throw ManifestError("unknown op '" + args.op + "'");
  }
  return json_out::multivector(out->at(ctx)) + "\n";
}

std::string cmd_connection(const Chart& chart, const std::string& frame, const std::string& point, bool mixed) {
  const std::string f = frame.empty() ? "coord" : frame;
  chart.frame(f);
  const ConnectionAt c = connection_at(chart, f, parse_point(chart, point));
  json_out::Object o;
  o.str("frame", f)
      .raw("gamma_bar", json_table(c.gamma_bar, c.n))
      .raw("chi", json_table(c.chi, c.n))
      .raw("gamma", json_table(c.gamma, c.n));
  if (mixed) {
    // Gamma_ij^k = Gamma_ijm g^{mk}
    const int n = c.n;
    std::vector<double> up(c.gamma.size(), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int m = 0; m < n; ++m) up[c.at(i, j, k)] += c.gamma[c.at(i, j, m)] * c.ginv(m, k);
    o.raw("gamma_mixed", json_table(up, n));
  }
  return o.done() + "\n";
}

std::string cmd_maxwell(const std::string& potential, const std::string& point) {
  const Chart m4 = builtin_chart("minkowski4");
  const MaxwellResult r = maxwell(m4, parse_potential(m4, potential), parse_point(m4, point));
  json_out::Object o;
  o.raw("F", json_out::multivector(r.F)).num("dF", r.dF).raw("J", json_out::multivector(r.J));
  return o.done() + "\n";
}

std::string cmd_parse(const std::string& text, const std::string& coords, const std::string& point) {
  std::vector<std::string> names = split(coords.empty() ? "x,y,z" : coords, ',');
  if (names.size() > static_cast<std::size_t>(kMaxChartDim)) throw DimMismatch("at most 4 coordinates");
  const Expr e = expr::parse(text, names);
  json_out::Object o;
  o.str("canonical", expr::to_string(e, names));
  if (!trim(point).empty()) {
    Chart c;
    c.coords = names;
    const std::vector<double> p = parse_point(c, point);
    const expr::Jet2 j = expr::eval_jet2(e, p);
    o.num("value", j.value).raw("grad", json_vector(j.grad)).raw("hess", json_vector(j.hess));
  }
  return o.done() + "\n";
}

}  // namespace gcalc::cli
