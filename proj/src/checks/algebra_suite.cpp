#include "common.hpp"

namespace gcalc::checks {

namespace {

// Blade coefficients relative to rows of p, re-expressed in the base frame.
Multivector outermorphism(const SqMat<double>& p, const Multivector& a) {
  const int n = p.n;
  Multivector out(n);
  for (Mask m = 0; m < a.c.size(); ++m) {
    if (a.c[m] == 0.0) continue;
    Multivector blade = Multivector::scalar(n, a.c[m]);
    for (int i = 0; i < n; ++i) {
      if (!(m & (Mask{1} << i))) continue;
      std::vector<double> row(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) row[k] = p(i, k);
      blade = wedge(blade, Multivector::vector(n, row));
    }
    out += blade;
  }
  return out;
}

// Runs body once per instance for n = 2, 3, 4, alternating definite and
// indefinite Grams.
template <class Body>
void per_dimension(Suite& s, Rng& rng, Acc& acc, Body body) {
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < s.samples(); ++t) {
      const Gram g(random_gram(rng, n, t % 2 == 1));
      body(n, g);
      acc.sample();
    }
  }
}

double dot_vec(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void algebra_suite(Suite& s) {
  s.run("fundamental_identity", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const Multivector a = random_multivector(rng, n, 1);
      const Multivector b = random_multivector(rng, n);
      acc.add(rel_dev(gp(a, b, g), dot(a, b, g) + wedge(a, b)));
    });
  });

  s.run("associativity", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const Multivector a = random_multivector(rng, n);
      const Multivector b = random_multivector(rng, n);
      const Multivector c = random_multivector(rng, n);
      acc.add(rel_dev(gp(gp(a, b, g), c, g), gp(a, gp(b, c, g), g)));
    });
  });

  s.run("product_routes_agree", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const Multivector a = random_multivector(rng, n);
      const Multivector b = random_multivector(rng, n);
      acc.add(rel_dev(gp(a, b, g), gp_t(a, b, g.g())));
    });
  });

  s.run("vector_symmetry", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const Multivector a = random_multivector(rng, n, 1);
      const Multivector b = random_multivector(rng, n, 1);
      const Multivector ab = gp(a, b, g);
      const Multivector ba = gp(b, a, g);
      acc.add(rel_dev(dot(a, b, g), 0.5 * (ab + ba)));
      acc.add(rel_dev(wedge(a, b), 0.5 * (ab - ba)));
    });
  });

  s.run("wedge_gram_independent", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const Gram g2(random_gram(rng, n, rng.coin()));
      const int j = rng.integer(0, n);
      const int k = rng.integer(0, n - j);
      const Multivector a = random_multivector(rng, n, j);
      const Multivector b = random_multivector(rng, n, k);
      const Multivector w = wedge(a, b);
      acc.add(rel_dev(grade(gp(a, b, g), j + k), w));
      acc.add(rel_dev(grade(gp(a, b, g2), j + k), w));
    });
  });

  s.run("duality_relations", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const Multivector a = random_multivector(rng, n, rng.integer(0, n));
      const Multivector b = random_multivector(rng, n, rng.integer(0, n));
      acc.add(rel_dev(dual(dot(a, b, g), g), wedge(a, dual(b, g))));
      acc.add(rel_dev(dual(wedge(a, b), g), dot(a, dual(b, g), g)));
    });
  });

  s.run("pseudoscalar_dual", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      acc.add(rel_dev(dual(pseudoscalar(g), g), Multivector::scalar(n, 1.0)));
    });
  });

  s.run("trace_rot_basis_independent", 1e-10, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const LinMap f{random_matrix(rng, n)};
      const SqMat<double> p = random_matrix(rng, n);
      const Gram g2(congruence(p, g.g()));
      const TraceRot a = trace_rot(f, g);
      const TraceRot b = trace_rot(change_basis(f, g, p), g2);
      acc.add(rel_dev(a.trace, b.trace));
      acc.add(rel_dev(a.rot, outermorphism(p, b.rot)));
    });
  });

  s.run("tsa_reconstruction", 1e-12, [&](Rng& rng, Acc& acc) {
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const LinMap f{random_matrix(rng, n)};
      const Tsa t = tsa_decompose(f, g);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double rebuilt = t.trace / n * g.inv()(i, j) + t.antisym.f(i, j) + t.traceless_sym.f(i, j);
          acc.add(rel_dev(rebuilt, f.f(i, j)));
          acc.add(std::abs(t.antisym.f(i, j) + t.antisym.f(j, i)));
          acc.add(std::abs(t.traceless_sym.f(i, j) - t.traceless_sym.f(j, i)));
        }
      }
      acc.add(std::abs(trace_rot(t.traceless_sym, g).trace));
    });
  });

  // a . rot f = c f-(a): c fitted per map, its spread is the deviation.
  s.run("rotation_constant", 1e-10, [&](Rng& rng, Acc& acc) {
    double first = std::nan("");
    double sum = 0.0;
    int count = 0;
    per_dimension(s, rng, acc, [&](int n, const Gram& g) {
      const LinMap f{random_matrix(rng, n)};
      const std::vector<double> a = random_vector(rng, n);
      const Multivector lhs = dot(Multivector::vector(n, a), trace_rot(f, g).rot, g);
      const std::vector<double> x = apply(tsa_decompose(f, g).antisym, g, a);
      std::vector<double> y(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) y[i] = lhs.c[Mask{1} << i];
      const double c = dot_vec(x, y) / dot_vec(x, x);
      if (std::isnan(first)) first = c;
      acc.add(std::abs(c - first));
      std::vector<double> cx(x);
      for (auto& v : cx) v *= c;
      acc.add(rel_dev(y, cx));
      acc.add(std::abs(max_abs(grade(lhs, 1)) - max_abs(lhs)));
      sum += c;
      ++count;
    });
    acc.measured["c"] = sum / count;
    acc.measured["c_minus_2"] = sum / count - 2.0;
  });
}

}  // namespace gcalc::checks
