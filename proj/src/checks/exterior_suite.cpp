#include "common.hpp"
#include "gcalc/mdd.hpp"

namespace gcalc::checks {

namespace {

// Same coordinates, a second metric.
Chart remetric(const Chart& c) {
  if (c.name == "polar2") {
    return c.with_metric(parse_matrix({{"2+sin(theta)", "0.3*r"}, {"0.3*r", "1+r^2"}}, c.coords));
  }
  return c.with_metric(parse_matrix({{"1+0.5*cos(phi)^2", "0.2"}, {"0.2", "1+sin(theta)^2"}}, c.coords));
}

}  // namespace

void exterior_suite(Suite& s) {
  const auto charts = charts_for(s.options(), {"sphere2", "polar2", "euclid3"});
  const auto frames = frames_of(charts);

  s.run("d_squared", 1e-8, [&](Rng& rng, Acc& acc) {
    for (const auto& cf : frames) {
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(*cf.chart, random_point(rng, *cf.chart));
        const FieldPtr a = random_field(rng, *cf.chart, cf.frame);
        acc.add(max_abs(ext_d_field(ext_d_field(a))->at(ctx)));
        acc.sample();
      }
    }
  });

  s.run("divergence_squared", 1e-8, [&](Rng& rng, Acc& acc) {
    for (const auto& cf : frames) {
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(*cf.chart, random_point(rng, *cf.chart));
        const FieldPtr a = random_field(rng, *cf.chart, cf.frame);
        const FieldPtr div = divergence_field(a, Conn::LeviCivita);
        acc.add(max_abs(divergence_field(div, Conn::LeviCivita)->at(ctx)));
        acc.sample();
      }
    }
  });

  s.run("graded_leibniz", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& cf : frames) {
      const int n = cf.chart->dim();
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(*cf.chart, random_point(rng, *cf.chart));
        const int j = rng.integer(0, n);
        const int k = rng.integer(0, n);
        const FieldPtr a = random_field(rng, *cf.chart, cf.frame, j);
        const FieldPtr b = random_field(rng, *cf.chart, cf.frame, k);
        const Multivector lhs = ext_d_field(wedge(a, b))->at(ctx);
        const double sign = (j % 2) ? -1.0 : 1.0;
        const Multivector rhs = wedge(ext_d_field(a)->at(ctx), b->at(ctx)) +
                                sign * wedge(a->at(ctx), ext_d_field(b)->at(ctx));
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });

  // Gradient-frame components of dA do not see the metric.
  s.run("metric_independence", 1e-10, [&](Rng& rng, Acc& acc) {
    for (const char* name : {"sphere2", "polar2"}) {
      const Chart c1 = builtin_chart(name);
      const Chart c2 = remetric(c1);
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, c1);
        const FieldDef def = random_field_def(rng, c1, "grad");
        PointContext x1(c1, p);
        PointContext x2(c2, p);
        const Multivector d1 = ext_d_field(field_from_def(c1, def))->at(x1);
        const Multivector d2 = ext_d_field(field_from_def(c2, def))->at(x2);
        acc.add(rel_dev(d1, d2));
        acc.sample();
      }
    }
  });

  s.run("d_of_scalar_is_directional_derivative", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& cf : frames) {
      const int n = cf.chart->dim();
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, *cf.chart);
        PointContext ctx(*cf.chart, p);
        const Expr phi = random_smooth(rng, *cf.chart);
        const auto a = random_vector(rng, n);
        const Multivector dphi = ext_d_field(expr_field(n, cf.frame, {{0, phi}}))->at(ctx);
        const Gram g(ctx.gram<double>(cf.frame).g);
        const double lhs = dot(Multivector::vector(n, a), dphi, g).c[0];
        const double rhs = dirderiv_scalar(*cf.chart, eval_frame(*cf.chart, cf.frame, p), p, a, phi);
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });
}

}  // namespace gcalc::checks
