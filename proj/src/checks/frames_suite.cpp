#include "common.hpp"
#include "gcalc/mdd.hpp"

namespace gcalc::checks {

namespace {

using expr::Expr;

std::vector<Expr> random_vector_exprs(Rng& rng, const Chart& c) {
  std::vector<Expr> v;
  for (int i = 0; i < c.dim(); ++i) v.push_back(random_smooth(rng, c));
  return v;
}

// [a, b] with one derivative left: inputs lifted to Jet11, result at Jet1.
std::vector<Jet1> bracket_jet(PointContext& ctx, const std::vector<Expr>& a, const std::vector<Expr>& b) {
  const int n = ctx.dim();
  std::vector<Jet11> ja;
  std::vector<Jet11> jb;
  for (int i = 0; i < n; ++i) {
    ja.push_back(ctx.lift<Jet11>(a[i]));
    jb.push_back(ctx.lift<Jet11>(b[i]));
  }
  std::vector<Jet1> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out[k] += ja[l].v * jb[k].d[l] - jb[l].v * ja[k].d[l];
  return out;
}

// [c, x] for x known to first order.
std::vector<double> bracket_with(PointContext& ctx, const std::vector<Expr>& c, const std::vector<Jet1>& x) {
  const int n = ctx.dim();
  std::vector<Jet1> jc;
  for (int i = 0; i < n; ++i) jc.push_back(ctx.lift<Jet1>(c[i]));
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out[k] += jc[l].v * x[k].d[l] - x[l].v * jc[k].d[l];
  return out;
}

std::vector<double> axpy(double s, const std::vector<double>& x, std::vector<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
  return y;
}

double identity_dev(const SqMat<double>& m) {
  double d = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) d = std::max(d, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
  return d;
}

std::vector<Expr> scaled(const Expr& s, const std::vector<Expr>& v) {
  std::vector<Expr> out;
  for (const auto& e : v) out.push_back(s * e);
  return out;
}

}  // namespace

void frames_suite(Suite& s) {
  const auto charts = charts_for(s.options(), {"euclid2", "euclid3", "polar2", "sphere2", "minkowski4"});
  const auto frames = frames_of(charts);

  s.run("reciprocal_frame", 1e-10, [&](Rng& rng, Acc& acc) {
    for (const auto& cf : frames) {
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, *cf.chart);
        PointContext ctx(*cf.chart, p);
        const auto& gr = ctx.gram<double>(cf.frame);
        const SqMat<double> recip = reciprocal_frame(gr.F, Gram(gr.G));
        const SqMat<double> m = matmul(matmul(recip, gr.G), transpose(gr.F));
        acc.add(identity_dev(m));
        acc.sample();
      }
    }
  });

  s.run("commutator_coefficients_antisymmetric", 0.0, [&](Rng& rng, Acc& acc) {
    for (const auto& cf : frames) {
      for (int t = 0; t < s.samples(); ++t) {
        const FrameAt f = eval_frame(*cf.chart, cf.frame, random_point(rng, *cf.chart));
        for (int i = 0; i < f.n; ++i)
          for (int j = 0; j < f.n; ++j)
            for (int k = 0; k < f.n; ++k) acc.add(std::abs(f.L[f.at(i, j, k)] + f.L[f.at(j, i, k)]));
        acc.sample();
      }
    }
  });

  s.run("lie_bracket_bilinear_antisymmetric", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, c);
        const auto a = random_vector_exprs(rng, c);
        const auto b = random_vector_exprs(rng, c);
        const auto d = random_vector_exprs(rng, c);
        const double lam = rng.uniform(-2, 2);
        std::vector<Expr> comb;
        for (int i = 0; i < c.dim(); ++i) comb.push_back(Expr::number(lam) * b[i] + d[i]);
        const auto ab = lie_bracket(c, a, b, p);
        const auto ad = lie_bracket(c, a, d, p);
        acc.add(rel_dev(lie_bracket(c, a, comb, p), axpy(lam, ab, ad)));
        std::vector<double> zero(ab.size(), 0.0);
        acc.add(rel_dev(axpy(1.0, lie_bracket(c, b, a, p), ab), zero));
        acc.sample();
      }
    }
  });

  s.run("lie_bracket_jacobi", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const auto a = random_vector_exprs(rng, c);
        const auto b = random_vector_exprs(rng, c);
        const auto d = random_vector_exprs(rng, c);
        const auto t1 = bracket_with(ctx, a, bracket_jet(ctx, b, d));
        const auto t2 = bracket_with(ctx, d, bracket_jet(ctx, a, b));
        const auto t3 = bracket_with(ctx, b, bracket_jet(ctx, d, a));
        const auto sum = axpy(1.0, t1, axpy(1.0, t2, t3));
        double scale = 1.0;
        for (const auto* v : {&t1, &t2, &t3})
          for (double x : *v) scale = std::max(scale, std::abs(x));
        double m = 0.0;
        for (double x : sum) m = std::max(m, std::abs(x));
        acc.add(m / scale);
        acc.sample();
      }
    }
  });

  s.run("lie_bracket_scalar_multipliers", 1e-9, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, c);
        PointContext ctx(c, p);
        const auto a = random_vector_exprs(rng, c);
        const auto b = random_vector_exprs(rng, c);
        const Expr alpha = random_smooth(rng, c);
        const Expr beta = random_smooth(rng, c);
        const auto lhs = lie_bracket(c, scaled(alpha, a), scaled(beta, b), p);
        const expr::Jet2 ja = ctx.jet(alpha);
        const expr::Jet2 jb = ctx.jet(beta);
        double da_beta = 0.0;
        double db_alpha = 0.0;
        std::vector<double> av;
        std::vector<double> bv;
        for (int i = 0; i < c.dim(); ++i) {
          av.push_back(ctx.jet(a[i]).value);
          bv.push_back(ctx.jet(b[i]).value);
          da_beta += av[i] * jb.grad[i];
          db_alpha += bv[i] * ja.grad[i];
        }
        auto rhs = axpy(ja.value * jb.value, lie_bracket(c, a, b, p),
                        axpy(-jb.value * db_alpha, av, axpy(ja.value * da_beta, bv, std::vector<double>(av.size()))));
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });

  // Holds where the frame Gram is constant: sphere2 orthonormal frame, and a
  // position-dependent rotation of the Euclidean frame (trivial when n = 2).
  s.run("commutator_jacobi_constraint", 1e-8, [&](Rng& rng, Acc& acc) {
    Chart rot = builtin_chart("euclid3");
    const std::string ca = "cos(0.7*z+0.4*x*y)", sa = "sin(0.7*z+0.4*x*y)";
    const std::string cb = "cos(0.5*x-0.3*y*z)", sb = "sin(0.5*x-0.3*y*z)";
    rot.frames["rotating"] = parse_matrix({{ca, "-" + sa + "*" + cb, sa + "*" + sb},
                                           {sa, ca + "*" + cb, "-" + ca + "*" + sb},
                                           {"0", sb, cb}},
                                          rot.coords);
    rot.finalize();
    const std::vector<std::pair<Chart, std::string>> cases{{builtin_chart("sphere2"), "orthonormal"},
                                                           {rot, "rotating"}};
    double largest = 0.0;
    for (const auto& [c, frame] : cases) {
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const auto& f = ctx.frame<Jet1>(frame);
        const int n = f.n;
        auto L = [&](int i, int j, int k) { return f.L[f.at(i, j, k)].v; };
        auto dL = [&](int e, int i, int j, int k) {
          double s2 = 0.0;
          for (int l = 0; l < n; ++l) s2 += f.F(e, l).v * f.L[f.at(i, j, k)].d[l];
          return s2;
        };
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              for (int m = 0; m < n; ++m) {
                double lhs = 0.0;
                for (int p = 0; p < n; ++p)
                  for (int q = 0; q < n; ++q)
                    lhs += f.ginv(p, q).v *
                           (L(j, k, p) * L(q, i, m) + L(i, j, p) * L(q, k, m) + L(k, i, p) * L(q, j, m));
                const double rhs = dL(i, j, k, m) + dL(k, i, j, m) + dL(j, k, i, m);
                acc.add(rel_dev(lhs, rhs));
                largest = std::max(largest, std::abs(rhs));
              }
        acc.sample();
      }
    }
    acc.measured["largest_term"] = largest;
  });

  // Cartesian and polar coordinates of one annulus, seen from both charts.
  s.run("coordinate_change", 1e-9, [&](Rng& rng, Acc& acc) {
    const Chart polar = builtin_chart("polar2");
    Chart cart = builtin_chart("euclid2");
    cart.domain = {{0.3, 1.2}, {0.3, 1.2}};
    const std::vector<std::string> ys_polar{"r*cos(theta)", "r*sin(theta)"};
    const std::vector<std::string> ys_cart{"sqrt(x^2+y^2)"};
    auto run = [&](const Chart& c, const std::vector<std::string>& ys) {
      const auto p = random_point(rng, c);
      PointContext ctx(c, p);
      const auto& gr = ctx.gram<double>("coord");
      for (const auto& text : ys) {
        const Expr y = expr::parse(text, c.coords);
        const Multivector dy = gradient(c, expr_field(c.dim(), "coord", {{0, y}}), p);
        const expr::Jet2 jy = ctx.jet(y);
        for (int i = 0; i < c.dim(); ++i) {
          double dot_v = 0.0;
          for (int k = 0; k < c.dim(); ++k) dot_v += gr.g(i, k) * dy.c[Mask{1} << k];
          acc.add(rel_dev(dot_v, jy.grad[i]));
        }
      }
      acc.sample();
    };
    for (int t = 0; t < s.samples(); ++t) {
      run(polar, ys_polar);
      run(cart, ys_cart);
    }
  });

  s.run("gradient_basis_reciprocal", 1e-10, [&](Rng& rng, Acc& acc) {
    for (const auto& c : charts) {
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, c);
        PointContext ctx(c, p);
        const auto& coord = ctx.gram<double>("coord");
        const SqMat<double> dx = gradient_basis(c, p);
        acc.add(identity_dev(matmul(matmul(dx, coord.G), transpose(coord.F))));
        acc.sample();
      }
    }
  });

  s.run("frame_classification", 0.0, [&](Rng& rng, Acc& acc) {
    struct Expect {
      const char* chart;
      const char* frame;
      bool orthonormal;
      bool holonomic;
      std::vector<int> signature;
    };
    const std::vector<Expect> cases{{"euclid3", "coord", true, true, {1, 1, 1}},
                                    {"sphere2", "coord", false, true, {}},
                                    {"sphere2", "orthonormal", true, false, {1, 1}},
                                    {"polar2", "skew", false, false, {}},
                                    {"minkowski4", "coord", true, true, {1, -1, -1, -1}}};
    for (const auto& e : cases) {
      const Chart c = builtin_chart(e.chart);
      for (int t = 0; t < s.samples(); ++t) {
        const FrameClass k = classify_frame(eval_frame(c, e.frame, random_point(rng, c)));
        const bool ok = k.orthonormal == e.orthonormal && k.holonomic == e.holonomic && k.signature == e.signature;
        acc.add(ok ? 0.0 : 1.0);
        acc.sample();
      }
    }
  });
}

}  // namespace gcalc::checks
