#include "gcalc/charts.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gcalc {

using nlohmann::json;

namespace {

std::map<Mask, Expr> parse_components(const std::map<std::string, std::string>& comps, const Chart& c) {
  std::map<Mask, Expr> out;
  for (const auto& [key, text] : comps) out[parse_blade_key(key, c.dim())] = expr::parse(text, c.coords);
  return out;
}

void add_field(Chart& c, const std::string& name, const std::string& frame,
               const std::map<std::string, std::string>& comps) {
  c.fields[name] = FieldDef{frame, parse_components(comps, c)};
}

Chart euclid(int n) {
  const std::vector<std::string> all{"x", "y", "z"};
  std::vector<std::string> coords(all.begin(), all.begin() + n);
  std::vector<std::vector<std::string>> g(static_cast<std::size_t>(n), std::vector<std::string>(static_cast<std::size_t>(n), "0"));
  for (int i = 0; i < n; ++i) g[i][i] = "1";
  Chart c = make_chart("euclid" + std::to_string(n), coords, g);
  add_field(c, "phi", "coord", {{"", n == 2 ? "x^2+y^2" : "x^2+y^2+z^2"}});
  add_field(c, "xe1", "coord", {{"1", "x"}});
  if (n == 3) add_field(c, "swirl", "coord", {{"1", "-y"}, {"2", "x"}});
  c.finalize();
  return c;
}

Chart polar2() {
  Chart c = make_chart("polar2", {"r", "theta"}, {{"1", "0"}, {"0", "r^2"}});
  c.domain = {{0.1, 2.0}, {-3.0, 3.0}};
  c.frames["skew"] = parse_matrix({{"1", "0.3*cos(theta)"}, {"0.5*r", "1+r^2"}}, c.coords);
  add_field(c, "phi", "coord", {{"", "r^2"}});
  c.finalize();
  return c;
}

Chart sphere2() {
  Chart c = make_chart("sphere2", {"theta", "phi"}, {{"1", "0"}, {"0", "sin(theta)^2"}});
  c.domain = {{0.1, 3.141592653589793 - 0.1}, {-3.0, 3.0}};
  c.frames["orthonormal"] = parse_matrix({{"1", "0"}, {"0", "1/sin(theta)"}}, c.coords);
  add_field(c, "e_theta", "coord", {{"1", "1"}});
  add_field(c, "e_phi", "coord", {{"2", "1"}});
  add_field(c, "height", "coord", {{"", "cos(theta)"}});
  c.finalize();
  return c;
}

Chart minkowski4() {
  Chart c = make_chart("minkowski4", {"t", "x", "y", "z"},
                       {{"1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "-1"}});
  add_field(c, "A", "grad", {{"3", "x^2/2"}});
  c.finalize();
  return c;
}

std::vector<std::vector<std::string>> string_matrix(const json& j, const char* what) {
  if (!j.is_array()) throw ManifestError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ManifestError(std::string(what) + " rows must be arrays");
    std::vector<std::string> row;
    for (const auto& e : r) {
      if (e.is_string()) {
        row.push_back(e.get<std::string>());
      } else if (e.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << e.get<double>();
        row.push_back(os.str());
      } else {
        throw ManifestError(std::string(what) + " entries must be expression strings");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string expr_text(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << j.get<double>();
    return os.str();
  }
  throw ManifestError(what + " must be an expression string");
}

}  // namespace

std::vector<std::string> builtin_chart_names() { return {"euclid2", "euclid3", "polar2", "sphere2", "minkowski4"}; }

Chart builtin_chart(const std::string& name) {
  if (name == "euclid2") return euclid(2);
  if (name == "euclid3") return euclid(3);
  if (name == "polar2") return polar2();
  if (name == "sphere2") return sphere2();
  if (name == "minkowski4") return minkowski4();
  throw ManifestError("unknown builtin chart '" + name + "'");
}

Chart load_manifest_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ManifestError("manifest must be a JSON object");
  for (const char* key : {"coordinates", "metric"}) {
    if (!j.contains(key)) throw ManifestError(std::string("manifest is missing '") + key + "'");
  }
  Chart c;
  c.name = j.value("name", std::string("manifest"));
  if (!j["coordinates"].is_array()) throw ManifestError("'coordinates' must be an array of names");
  for (const auto& x : j["coordinates"]) {
    if (!x.is_string()) throw ManifestError("coordinate names must be strings");
    c.coords.push_back(x.get<std::string>());
  }
  if (c.coords.empty() || c.dim() > kMaxChartDim) throw ManifestError("chart must have between 1 and 4 coordinates");
  c.metric = parse_matrix(string_matrix(j["metric"], "metric"), c.coords);

  if (j.contains("frames")) {
    if (!j["frames"].is_object()) throw ManifestError("'frames' must be an object");
    for (const auto& [fname, fj] : j["frames"].items()) {
      if (fj.is_string() && fj.get<std::string>() == "identity") {
        SqMat<Expr> id(c.dim());
        for (int i = 0; i < c.dim(); ++i) id(i, i) = Expr::number(1.0);
        c.frames[fname] = id;
      } else {
        c.frames[fname] = parse_matrix(string_matrix(fj, "frame"), c.coords);
      }
    }
  }
  if (j.contains("contorsion")) {
    if (!j["contorsion"].is_array()) throw ManifestError("'contorsion' must be an array");
    for (const auto& e : j["contorsion"]) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") || !e.contains("expr")) {
        throw ManifestError("contorsion entries need i, j, k and expr");
      }
      if (!e["i"].is_number_integer() || !e["j"].is_number_integer() || !e["k"].is_number_integer()) {
        throw ManifestError("contorsion indices must be integers");
      }
      c.contorsion.push_back({e["i"].get<int>() - 1, e["j"].get<int>() - 1, e["k"].get<int>() - 1,
                              expr::parse(expr_text(e["expr"], "contorsion expr"), c.coords)});
    }
  }
  if (j.contains("orientation")) {
    if (!j["orientation"].is_number_integer()) throw ManifestError("'orientation' must be +1 or -1");
    c.orientation = j["orientation"].get<int>();
  }
  if (j.contains("domain")) {
    const json& d = j["domain"];
    c.domain.assign(static_cast<std::size_t>(c.dim()), {-1.0, 1.0});
    auto interval = [](const json& v) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ManifestError("domain intervals must be [lo, hi]");
      }
      return std::make_pair(v[0].get<double>(), v[1].get<double>());
    };
    if (d.is_array()) {
      if (static_cast<int>(d.size()) != c.dim()) throw ManifestError("domain needs one interval per coordinate");
      for (int i = 0; i < c.dim(); ++i) c.domain[i] = interval(d[i]);
    } else if (d.is_object()) {
      for (const auto& [name, v] : d.items()) {
        auto it = std::find(c.coords.begin(), c.coords.end(), name);
        if (it == c.coords.end()) throw ManifestError("domain names unknown coordinate '" + name + "'");
        c.domain[static_cast<std::size_t>(it - c.coords.begin())] = interval(v);
      }
    } else {
      throw ManifestError("'domain' must be an array or object");
    }
  }
  if (j.contains("fields")) {
    if (!j["fields"].is_object()) throw ManifestError("'fields' must be an object");
    for (const auto& [fname, fj] : j["fields"].items()) {
      if (!fj.is_object() || !fj.contains("components") || !fj["components"].is_object()) {
        throw ManifestError("field '" + fname + "' needs a components object");
      }
      std::map<std::string, std::string> comps;
      for (const auto& [key, v] : fj["components"].items()) comps[key] = expr_text(v, "field component");
      add_field(c, fname, fj.value("frame", std::string("coord")), comps);
    }
  }
  c.finalize();
  return c;
}

Chart load_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot read manifest '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_manifest_text(ss.str());
}

}  // namespace gcalc
