#pragma once

#include <cmath>
#include <vector>

#include "doctest.h"
#include "gcalc/ga.hpp"

inline constexpr double kPi = 3.141592653589793;

inline void check_mv(const gcalc::Multivector& got, const gcalc::Multivector& want, double tol = 1e-12) {
  REQUIRE(got.n == want.n);
  for (gcalc::Mask m = 0; m < got.c.size(); ++m) {
    INFO("blade " << gcalc::blade_key(m));
    CHECK(std::abs(got.c[m] - want.c[m]) <= tol);
  }
}

inline gcalc::Multivector mv(int n, std::initializer_list<std::pair<gcalc::Mask, double>> terms) {
  gcalc::Multivector r(n);
  for (const auto& [m, v] : terms) r.c[m] = v;
  return r;
}
