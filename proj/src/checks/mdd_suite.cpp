#include "common.hpp"
#include "gcalc/connection.hpp"
#include "gcalc/mdd.hpp"

namespace gcalc::checks {

namespace {

// sphere2 and polar2 with and without random contorsion, every frame but grad.
std::vector<Chart> mdd_charts(Suite& s, Rng& rng) {
  auto charts = charts_for(s.options(), {"sphere2", "polar2"});
  for (const char* name : {"sphere2", "polar2"}) {
    const Chart c = builtin_chart(name);
    charts.push_back(c.with_contorsion(random_contorsion(rng, c)));
  }
  return charts;
}

struct Sample {
  PointContext ctx;
  Gram g;
  std::vector<double> dir;
  Sample(const Chart& c, const std::string& frame, Rng& rng)
      : ctx(c, random_point(rng, c)), g(ctx.gram<double>(frame).g), dir(random_vector(rng, c.dim())) {}
  Multivector d(const FieldPtr& f) { return mdd_field(f, dir)->at(ctx); }
  Multivector at(const FieldPtr& f) { return f->at(ctx); }
};

// Runs body on every (chart, frame) pair, samples() times each.
template <class Body>
void each_sample(Suite& s, Rng& rng, Acc& acc, const std::vector<Chart>& charts, Body body) {
  for (const auto& cf : frames_of(charts)) {
    for (int t = 0; t < s.samples(); ++t) {
      Sample smp(*cf.chart, cf.frame, rng);
      body(*cf.chart, cf.frame, smp);
      acc.sample();
    }
  }
}

}  // namespace

void mdd_suite(Suite& s) {
  s.run("product_rule", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    each_sample(s, rng, acc, charts, [&](const Chart& c, const std::string& f, Sample& x) {
      const FieldPtr a = random_field(rng, c, f);
      const FieldPtr b = random_field(rng, c, f);
      acc.add(rel_dev(x.d(gp(a, b)), gp(x.d(a), x.at(b), x.g) + gp(x.at(a), x.d(b), x.g)));
    });
  });

  s.run("grade_preservation", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    each_sample(s, rng, acc, charts, [&](const Chart& c, const std::string& f, Sample& x) {
      const FieldPtr a = random_field(rng, c, f);
      for (int k = 0; k <= c.dim(); ++k) {
        const Multivector dk = x.d(grade(a, k));
        acc.add(max_abs(dk - grade(dk, k)) / std::max(1.0, max_abs(dk)));
      }
    });
  });

  s.run("metric_compatibility", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    each_sample(s, rng, acc, charts, [&](const Chart& c, const std::string& f, Sample& x) {
      const FieldPtr a = random_field(rng, c, f, 1);
      const FieldPtr b = random_field(rng, c, f, 1);
      acc.add(rel_dev(x.d(dot(a, b)), dot(x.d(a), x.at(b), x.g) + dot(x.at(a), x.d(b), x.g)));
    });
  });

  s.run("dot_wedge_compatibility", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    each_sample(s, rng, acc, charts, [&](const Chart& c, const std::string& f, Sample& x) {
      const FieldPtr a = random_field(rng, c, f);
      const FieldPtr b = random_field(rng, c, f);
      acc.add(rel_dev(x.d(dot(a, b)), dot(x.d(a), x.at(b), x.g) + dot(x.at(a), x.d(b), x.g)));
      acc.add(rel_dev(x.d(wedge(a, b)), wedge(x.d(a), x.at(b)) + wedge(x.at(a), x.d(b))));
    });
  });

  s.run("pseudoscalar_constant", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    each_sample(s, rng, acc, charts, [&](const Chart& c, const std::string& f, Sample& x) {
      acc.add(max_abs(x.d(pseudoscalar_field(c.dim(), f))));
    });
  });

  s.run("gradient_frame_independence", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    for (const auto& c : charts) {
      for (const auto& [frame, m] : c.frames) {
        if (frame == "coord") continue;
        for (int t = 0; t < s.samples(); ++t) {
          PointContext ctx(c, random_point(rng, c));
          const FieldPtr a = random_field(rng, c, "coord");
          const Multivector direct = gradient_field(a)->at(ctx);
          const Multivector via = reexpress(gradient_field(reexpress(a, frame)), "coord")->at(ctx);
          acc.add(rel_dev(direct, via));
          acc.sample();
        }
      }
    }
  });

  s.run("gradient_splits_into_divergence_and_curl", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    each_sample(s, rng, acc, charts, [&](const Chart& c, const std::string& f, Sample& x) {
      const FieldPtr a = random_field(rng, c, f);
      acc.add(rel_dev(x.at(gradient_field(a)), x.at(divergence_field(a)) + x.at(curl_field(a))));
    });
  });

  s.run("restriction_reproduces_coefficients", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = mdd_charts(s, rng);
    each_sample(s, rng, acc, charts, [&](const Chart& c, const std::string& f, Sample& x) {
      const int n = c.dim();
      const ConnectionAt& k = x.ctx.connection<double>(f, Conn::Chart);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Multivector d = x.at(mdd_basis_field(basis_field(n, f, Mask{1} << j), i));
          for (int m = 0; m < n; ++m) {
            double lowered = 0.0;
            for (int l = 0; l < n; ++l) lowered += d.c[Mask{1} << l] * k.g(l, m);
            acc.add(rel_dev(lowered, k.gamma[k.at(i, j, m)]));
          }
        }
    });
  });

  // Two different contorsions must be told apart on basis vectors, and on
  // basis bivectors where those are not pseudoscalars (n = 3).
  s.run("restriction_injective", 0.0, [&](Rng& rng, Acc& acc) {
    for (const char* name : {"sphere2", "polar2", "euclid3"}) {
      const Chart base = builtin_chart(name);
      const int n = base.dim();
      for (int t = 0; t < s.samples(); ++t) {
        const Chart c1 = base.with_contorsion(random_contorsion(rng, base));
        const Chart c2 = base.with_contorsion(random_contorsion(rng, base));
        const auto p = random_point(rng, base);
        PointContext x1(c1, p);
        PointContext x2(c2, p);
        for (int k : {1, 2}) {
          if (k == 2 && n < 3) continue;
          double diff = 0.0;
          for (Mask m = 0; m < (Mask{1} << n); ++m) {
            if (grade_of(m) != k) continue;
            for (int i = 0; i < n; ++i) {
              const FieldPtr d = mdd_basis_field(basis_field(n, "coord", m), i);
              diff = std::max(diff, max_abs_diff(d->at(x1), d->at(x2)));
            }
          }
          acc.add(diff > 1e-6 ? 0.0 : 1.0);
        }
        acc.sample();
      }
    }
  });

  // div A against the dual route *d*A; the sign is reported per chart and grade.
  s.run("codifferential_routes", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = charts_for(s.options(), {"euclid3", "polar2", "sphere2", "minkowski4"});
    for (const auto& c : charts) {
      for (int k = 0; k <= c.dim(); ++k) {
        double sign = 0.0;
        for (int t = 0; t < s.samples(); ++t) {
          const FieldPtr a = random_field(rng, c, "coord", k);
          const CodiffRoutes r = codifferential_routes(c, a, random_point(rng, c));
          const double scale = std::max({1.0, max_abs(r.divergence), max_abs(r.star_d_star)});
          acc.add(r.residual / scale);
          if (max_abs(r.divergence) > 1e-8) {
            if (sign != 0.0 && sign != r.sign) acc.add(1.0);
            sign = r.sign;
          }
          acc.sample();
        }
        if (k > 0) acc.measured["sign." + c.name + ".grade" + std::to_string(k)] = sign;
      }
    }
  });

  s.run("second_derivatives", 1e-9, [&](Rng& rng, Acc& acc) {
    const Chart e2 = builtin_chart("euclid2");
    const FieldPtr phi = field_from_def(e2, e2.fields.at("phi"));
    for (int t = 0; t < s.samples(); ++t) {
      const auto p = random_point(rng, e2);
      const auto a = random_vector(rng, 2);
      const SecondOps o = second_ops(e2, phi, a, p);
      acc.add(rel_dev(o.grad_grad, Multivector::scalar(2, 4.0)));
      acc.add(rel_dev(o.square, Multivector::scalar(2, 4.0)));
      acc.sample();
    }
    const auto charts = charts_for(s.options(), {"sphere2", "polar2"});
    for (const auto& cf : frames_of(charts)) {
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, *cf.chart);
        const auto a = random_vector(rng, cf.chart->dim());
        const FieldPtr f = random_field(rng, *cf.chart, cf.frame, 0);
        const SecondOps o = second_ops(*cf.chart, f, a, p, Conn::LeviCivita);
        // curl of a gradient vanishes without torsion
        acc.add(max_abs(grade(o.grad_grad, 2)) / std::max(1.0, max_abs(o.grad_grad)));
        acc.add(rel_dev(o.square, o.dot_dot + o.wedge_wedge));
        acc.sample();
      }
    }
    // Flat: D^2 is the scalar Laplacian, so it keeps grades apart.
    const Chart e3 = builtin_chart("euclid3");
    for (int t = 0; t < s.samples(); ++t) {
      const auto p = random_point(rng, e3);
      const auto a = random_vector(rng, 3);
      const int k = rng.integer(0, 3);
      const FieldPtr f = random_field(rng, e3, "coord", k);
      const SecondOps o = second_ops(e3, f, a, p);
      acc.add(max_abs(o.grad_grad - grade(o.grad_grad, k)) / std::max(1.0, max_abs(o.grad_grad)));
      acc.add(max_abs(o.wedge_wedge) / std::max(1.0, max_abs(o.grad_grad)));
      acc.sample();
    }
  });
}

}  // namespace gcalc::checks
