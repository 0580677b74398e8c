#pragma once

// Minimal JSON writer: doubles with 17 significant digits, keys in insertion
// order, non-finite numbers as null.

#include <string>

#include "gcalc/ga.hpp"

namespace gcalc::json_out {

std::string number(double v);
std::string string(const std::string& s);

class Object {
 public:
  Object& raw(const std::string& key, const std::string& json);
  Object& num(const std::string& key, double v) { return raw(key, number(v)); }
  Object& integer(const std::string& key, long long v) { return raw(key, std::to_string(v)); }
  Object& str(const std::string& key, const std::string& v) { return raw(key, string(v)); }
  Object& boolean(const std::string& key, bool v) { return raw(key, v ? "true" : "false"); }
  std::string done() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

// Blade-key -> coefficient map; exact zeros are omitted.
std::string multivector(const Multivector& a);

}  // namespace gcalc::json_out
