#include "gcalc/json_out.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace gcalc::json_out {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string string(const std::string& s) { return nlohmann::json(s).dump(); }

Object& Object::raw(const std::string& key, const std::string& json) {
  if (!body_.empty()) body_ += ", ";
  body_ += string(key) + ": " + json;
  return *this;
}

std::string multivector(const Multivector& a) {
  Object o;
  for (Mask m = 0; m < a.c.size(); ++m) {
    if (a.c[m] != 0.0) o.num(blade_key(m), a.c[m]);
  }
  return o.done();
}

}  // namespace gcalc::json_out
