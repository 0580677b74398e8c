#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gcalc/charts.hpp"
#include "gcalc/checks.hpp"
#include "gcalc/field.hpp"
#include "gcalc/random.hpp"

namespace gcalc::checks {

struct Acc {
  double dev = 0.0;
  int samples = 0;
  std::map<std::string, double> measured;

  // NaN sticks so that it fails the comparison against the tolerance.
  void add(double d) {
    if (std::isnan(d) || std::isnan(dev)) {
      dev = std::nan("");
    } else {
      dev = std::max(dev, d);
    }
  }
  void sample() { ++samples; }
};

class Suite {
 public:
  Suite(const CheckOptions& opts, Report& report, std::string name)
      : opts_(opts), report_(report), name_(std::move(name)) {}

  int samples() const { return std::max(1, opts_.samples); }
  const CheckOptions& options() const { return opts_; }

  void run(const std::string& check, double tol, const std::function<void(Rng&, Acc&)>& body);

 private:
  const CheckOptions& opts_;
  Report& report_;
  std::string name_;
};

inline double scale_of(const Multivector& a, const Multivector& b) {
  return std::max({1.0, max_abs(a), max_abs(b)});
}
inline double rel_dev(const Multivector& a, const Multivector& b) { return max_abs_diff(a, b) / scale_of(a, b); }
inline double abs_dev(const Multivector& a, const Multivector& b) { return max_abs_diff(a, b); }

inline double rel_dev(std::span<const double> a, std::span<const double> b) {
  double diff = 0.0;
  double scale = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  }
  return diff / scale;
}

inline double rel_dev(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

// Builtins plus the user manifest, when given.
std::vector<Chart> charts_for(const CheckOptions& opts, const std::vector<std::string>& builtin);

// (chart, frame) pairs with every non-gradient frame of each chart.
struct ChartFrame {
  const Chart* chart;
  std::string frame;
};
std::vector<ChartFrame> frames_of(const std::vector<Chart>& charts);

FieldPtr random_field(Rng& rng, const Chart& chart, const std::string& frame, int k = -1);

void algebra_suite(Suite& s);
void expr_suite(Suite& s);
void frames_suite(Suite& s);
void connection_suite(Suite& s);
void mdd_suite(Suite& s);
void exterior_suite(Suite& s);
void tensor_suite(Suite& s);
void forms_suite(Suite& s);
void maxwell_suite(Suite& s);

}  // namespace gcalc::checks
