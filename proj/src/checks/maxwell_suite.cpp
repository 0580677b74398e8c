#include "common.hpp"
#include "gcalc/maxwell.hpp"

namespace gcalc::checks {

void maxwell_suite(Suite& s) {
  const Chart m4 = builtin_chart("minkowski4");
  const auto e = [&](const char* t) { return expr::parse(t, m4.coords); };
  constexpr Mask dy = 0b0100;
  constexpr Mask dxdy = 0b0110;

  // A = (x^2/2) dy: F = x dx^dy, J = e_y.
  s.run("quadratic_potential", 1e-10, [&](Rng& rng, Acc& acc) {
    for (int t = 0; t < s.samples(); ++t) {
      const auto p = random_point(rng, m4);
      const MaxwellResult r = maxwell(m4, {{dy, e("x^2/2")}}, p);
      acc.add(r.dF);
      acc.add(max_abs_diff(r.F, Multivector::blade(4, dxdy, p[1])));
      acc.add(max_abs_diff(r.J, Multivector::blade(4, dy)));
      acc.sample();
    }
  });

  s.run("linear_and_zero_potential", 1e-10, [&](Rng& rng, Acc& acc) {
    for (int t = 0; t < s.samples(); ++t) {
      const auto p = random_point(rng, m4);
      const MaxwellResult lin = maxwell(m4, {{dy, e("x")}}, p);
      acc.add(lin.dF);
      acc.add(max_abs_diff(lin.F, Multivector::blade(4, dxdy)));
      acc.add(max_abs(lin.J));
      const MaxwellResult zero = maxwell(m4, {}, p);
      acc.add(max_abs(zero.F) + zero.dF + max_abs(zero.J));
      acc.sample();
    }
  });

  // grad ^ F = 0 for any potential.
  s.run("bianchi_random_potential", 1e-9, [&](Rng& rng, Acc& acc) {
    for (int t = 0; t < s.samples(); ++t) {
      const FieldDef a = random_field_def(rng, m4, "grad", 1);
      acc.add(maxwell(m4, a.components, random_point(rng, m4)).dF);
      acc.sample();
    }
  });
}

}  // namespace gcalc::checks
