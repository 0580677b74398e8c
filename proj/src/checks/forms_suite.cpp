#include <numeric>

#include "common.hpp"
#include "gcalc/forms.hpp"

namespace gcalc::checks {

namespace {

std::vector<int> indices(Mask m) {
  std::vector<int> v;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) v.push_back(i);
  return v;
}

int parity(std::vector<int> v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) s = -s;
  return s;
}

// Component of a form on an arbitrary index tuple (antisymmetric extension).
double comp(const Multivector& f, const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) {
    if (m & (Mask{1} << i)) return 0.0;
    m |= Mask{1} << i;
  }
  return parity(idx) * f.c[m];
}

double factorial(int k) { return k <= 1 ? 1.0 : k * factorial(k - 1); }

// Alternating-map wedge: (a^b)_I = 1/(j!k!) sum_sigma sgn(sigma) a_{sigma..} b_{..sigma}.
Multivector alt_wedge(const Multivector& a, int j, const Multivector& b, int k) {
  const int n = a.n;
  Multivector out(n);
  if (j + k > n) return out;
  for (Mask m = 0; m < out.c.size(); ++m) {
    if (grade_of(m) != j + k) continue;
    std::vector<int> perm = indices(m);
    double acc = 0.0;
    do {
      const std::vector<int> left(perm.begin(), perm.begin() + j);
      const std::vector<int> right(perm.begin() + j, perm.end());
      acc += parity(perm) * comp(a, left) * comp(b, right);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.c[m] = acc / (factorial(j) * factorial(k));
  }
  return out;
}

}  // namespace

void forms_suite(Suite& s) {
  const auto charts = charts_for(s.options(), {"polar2", "sphere2"});

  s.run("hat_linearity", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const FieldPtr alpha = random_field(rng, c, "grad", 0);
        const FieldPtr beta = random_field(rng, c, "grad", 0);
        const FieldPtr a = random_field(rng, c, "grad");
        const FieldPtr b = random_field(rng, c, "grad");
        const Multivector lhs = hat_map(add(gp(alpha, a), gp(beta, b))).at(ctx);
        const Multivector rhs =
            form_add(form_wedge(hat_map(alpha), hat_map(a)), form_wedge(hat_map(beta), hat_map(b))).at(ctx);
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });

  s.run("hat_wedge", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      const int n = c.dim();
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const int j = rng.integer(0, n);
        const int k = rng.integer(0, n);
        const std::string frame = rng.coin() ? "grad" : "coord";
        const FieldPtr a = random_field(rng, c, frame, j);
        const FieldPtr b = random_field(rng, c, frame, k);
        const Multivector lhs = hat_map(wedge(a, b)).at(ctx);
        const Multivector rhs = alt_wedge(hat_map(a).at(ctx), j, hat_map(b).at(ctx), k);
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });

  // Metric-dependent curl against the coordinate formula.
  s.run("hat_exterior_derivative", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (const std::string frame : {"grad", "coord"}) {
        for (int t = 0; t < s.samples(); ++t) {
          PointContext ctx(c, random_point(rng, c));
          const FieldPtr a = random_field(rng, c, frame);
          acc.add(rel_dev(hat_map(ext_d_field(a)).at(ctx), form_d(hat_map(a)).at(ctx)));
          acc.sample();
        }
      }
    }
  });

  s.run("form_d_squared", 1e-8, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const Form f = hat_map(random_field(rng, c, "grad"));
        acc.add(max_abs(form_d(form_d(f)).at(ctx)));
        acc.sample();
      }
    }
  });

  s.run("hat_round_trip", 0.0, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const FieldPtr a = random_field(rng, c, "grad");
        acc.add(max_abs_diff(hat_inverse(hat_map(a))->at(ctx), a->at(ctx)));
        acc.sample();
      }
    }
  });

  s.run("form_d_values", 1e-12, [&](Rng& rng, Acc& acc) {
    const Chart e2 = builtin_chart("euclid2");
    const auto x = [&](const char* t) { return expr::parse(t, e2.coords); };
    for (int t = 0; t < s.samples(); ++t) {
      PointContext ctx(e2, random_point(rng, e2));
      const Multivector d1 = form_d(make_form(2, {{0b10, x("x")}})).at(ctx);
      acc.add(max_abs_diff(d1, Multivector::blade(2, 0b11)));
      const Multivector d0 = form_d(make_form(2, {{0, x("x^2+y^2")}})).at(ctx);
      Multivector grad(2);
      grad.c[0b01] = 2 * ctx.point()[0];
      grad.c[0b10] = 2 * ctx.point()[1];
      acc.add(max_abs_diff(d0, grad));
      acc.sample();
    }
  });
}

}  // namespace gcalc::checks
