#include "common.hpp"
#include "gcalc/connection.hpp"
#include "gcalc/mdd.hpp"

namespace gcalc::checks {

namespace {

// Every builtin frame, plus contorted copies of the curved charts.
std::vector<Chart> connection_charts(Suite& s, Rng& rng) {
  auto charts = charts_for(s.options(), {"euclid2", "euclid3", "polar2", "sphere2", "minkowski4"});
  for (const char* name : {"polar2", "sphere2"}) {
    const Chart c = builtin_chart(name);
    charts.push_back(c.with_contorsion(random_contorsion(rng, c)));
  }
  return charts;
}

std::vector<double> vector_part(const Multivector& a) {
  std::vector<double> v(static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.n; ++i) v[i] = a.c[Mask{1} << i];
  return v;
}

}  // namespace

void connection_suite(Suite& s) {
  s.run("sphere2_christoffel", 1e-10, [&](Rng& rng, Acc& acc) {
    const Chart c = builtin_chart("sphere2");
    for (int t = 0; t < s.samples(); ++t) {
      const auto p = random_point(rng, c);
      const ConnectionAt k = connection_at(c, "coord", p, Conn::LeviCivita);
      const double sc = std::sin(p[0]) * std::cos(p[0]);
      const double cot = std::cos(p[0]) / std::sin(p[0]);
      std::vector<double> bar(8, 0.0);
      std::vector<double> mixed(8, 0.0);
      bar[k.at(1, 1, 0)] = -sc;
      bar[k.at(0, 1, 1)] = sc;
      bar[k.at(1, 0, 1)] = sc;
      mixed[k.at(0, 1, 1)] = cot;
      mixed[k.at(1, 0, 1)] = cot;
      mixed[k.at(1, 1, 0)] = -sc;
      acc.add(rel_dev(k.gamma_bar, bar));
      acc.add(rel_dev(k.vec, mixed));
      acc.sample();
    }
  });

  s.run("metric_compatibility", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = connection_charts(s, rng);
    for (const auto& cf : frames_of(charts)) {
      for (int t = 0; t < s.samples(); ++t) {
        const ConnectionAt k = connection_at(*cf.chart, cf.frame, random_point(rng, *cf.chart));
        for (int i = 0; i < k.n; ++i)
          for (int j = 0; j < k.n; ++j)
            for (int m = 0; m < k.n; ++m)
              acc.add(rel_dev(k.gamma[k.at(i, j, m)] + k.gamma[k.at(i, m, j)], k.dg[k.at(i, j, m)]));
        acc.sample();
      }
    }
  });

  s.run("torsion_identity", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = connection_charts(s, rng);
    for (const auto& cf : frames_of(charts)) {
      for (int t = 0; t < s.samples(); ++t) {
        const ConnectionAt k = connection_at(*cf.chart, cf.frame, random_point(rng, *cf.chart));
        for (int i = 0; i < k.n; ++i)
          for (int j = 0; j < k.n; ++j)
            for (int m = 0; m < k.n; ++m) {
              const auto ijm = k.at(i, j, m);
              const auto jim = k.at(j, i, m);
              acc.add(rel_dev(k.gamma_bar[ijm] - k.gamma_bar[jim], k.L[ijm]));
              acc.add(rel_dev(k.gamma[ijm] - k.gamma[jim], k.L[ijm] + k.chi[ijm] - k.chi[jim]));
            }
        acc.sample();
      }
    }
  });

  s.run("flat_orthonormal_holonomic_zero", 1e-12, [&](Rng& rng, Acc& acc) {
    for (const char* name : {"euclid2", "euclid3", "minkowski4"}) {
      const Chart c = builtin_chart(name);
      for (int t = 0; t < s.samples(); ++t) {
        const ConnectionAt k = connection_at(c, "coord", random_point(rng, c));
        for (double g : k.gamma) acc.add(std::abs(g));
        acc.sample();
      }
    }
  });

  s.run("torsion_operator", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = connection_charts(s, rng);
    for (const auto& cf : frames_of(charts)) {
      for (int t = 0; t < s.samples(); ++t) {
        const Chart& c = *cf.chart;
        const auto p = random_point(rng, c);
        const FieldPtr a = random_field(rng, c, cf.frame, 1);
        const FieldPtr b = random_field(rng, c, cf.frame, 1);
        const auto tau = torsion(c, a, b, p);
        PointContext ctx(c, p);
        const auto av = vector_part(a->at(ctx));
        const auto bv = vector_part(b->at(ctx));
        const ConnectionAt k = connection_at(c, cf.frame, p);
        const int n = c.dim();
        std::vector<double> expect(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m)
              for (int q = 0; q < n; ++q)
                expect[q] += av[i] * bv[j] * (k.chi[k.at(i, j, m)] - k.chi[k.at(j, i, m)]) * k.ginv(m, q);
        acc.add(rel_dev(tau, expect));
        acc.sample();
      }
    }
  });

  s.run("reciprocal_derivative", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = connection_charts(s, rng);
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, c);
        PointContext ctx(c, p);
        const ConnectionAt& k = ctx.connection<double>(cf.frame, Conn::Chart);
        const auto r = reciprocal_gamma(k);
        const int i = rng.integer(0, n - 1);
        for (int j = 0; j < n; ++j) {
          const Multivector d = mdd_basis_field(reciprocal_field(n, cf.frame, j), i)->at(ctx);
          // e^l = g^{lm} e_m
          std::vector<double> expect(static_cast<std::size_t>(n), 0.0);
          for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) expect[m] += r[k.at(i, j, l)] * k.ginv(l, m);
          acc.add(rel_dev(vector_part(d), expect));
        }
        acc.sample();
      }
    }
  });

  s.run("contorsion_operator", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = connection_charts(s, rng);
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, c);
        PointContext ctx(c, p);
        const auto a = random_vector(rng, n);
        const FieldPtr phi = random_field(rng, c, cf.frame, 0);
        const FieldPtr big = random_field(rng, c, cf.frame);
        acc.add(max_abs(contorsion_apply(c, a, phi, p)));
        const Multivector q = contorsion_apply(c, a, big, p);
        const Multivector q_scaled = contorsion_apply(c, a, gp(phi, big), p);
        acc.add(rel_dev(q_scaled, phi->at(ctx).c[0] * q));
        for (int kk = 0; kk <= n; ++kk) {
          const Multivector qk = contorsion_apply(c, a, grade(big, kk), p);
          acc.add(max_abs(qk - grade(qk, kk)) / std::max(1.0, max_abs(qk)));
        }
        acc.sample();
      }
    }
  });

  s.run("invalid_contorsion_rejected", 0.0, [&](Rng&, Acc& acc) {
    const Chart c = builtin_chart("sphere2");
    std::vector<ContorsionEntry> chi{{0, 1, 1, Expr::number(0.3)}};
    bool thrown = false;
    try {
      const Chart bad = c.with_contorsion(chi);
      connection_at(bad, "coord", std::vector<double>{1.0, 0.5});
    } catch (const InvalidContorsion&) {
      thrown = true;
    }
    acc.add(thrown ? 0.0 : 1.0);
    acc.sample();
  });
}

}  // namespace gcalc::checks
