#pragma once

// Seeded generators for property checks: expressions, fields, Grams, points.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcalc/ga.hpp"
#include "gcalc/manifold.hpp"

namespace gcalc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Independent stream for a named check, stable under reordering of checks.
  static Rng derive(std::uint64_t seed, const std::string& name);

  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

std::vector<double> random_point(Rng& rng, const Chart& chart);

// Smooth expression with no singularities anywhere (sums of products of
// polynomials, sin/cos, bounded exp).
std::string random_smooth_text(Rng& rng, const std::vector<std::string>& coords);
Expr random_smooth(Rng& rng, const Chart& chart);

// Expression exercising the whole function whitelist with arguments kept
// inside each function's domain for every real input.
std::string random_whitelist_text(Rng& rng, const std::vector<std::string>& coords, int depth = 3);

// Field with every blade populated (or only grade k when k >= 0).
FieldDef random_field_def(Rng& rng, const Chart& chart, const std::string& frame, int k = -1);

Multivector random_multivector(Rng& rng, int n, int k = -1);
std::vector<double> random_vector(Rng& rng, int n);
// Symmetric, well-conditioned, optionally indefinite.
SqMat<double> random_gram(Rng& rng, int n, bool indefinite);
SqMat<double> random_matrix(Rng& rng, int n);

// chi_ijk antisymmetric in (j, k), smooth coordinate expressions.
std::vector<ContorsionEntry> random_contorsion(Rng& rng, const Chart& chart, double scale = 0.3);

}  // namespace gcalc
