#include "common.hpp"
#include "gcalc/connection.hpp"
#include "gcalc/tensor.hpp"

namespace gcalc::checks {

namespace {

// Scalar-valued tensor with grade-1 slots and every component populated.
TensorField random_tensor(Rng& rng, const Chart& c, const std::string& frame, int rank) {
  const int n = c.dim();
  TensorField t(n, frame, TensorSignature{std::vector<int>(static_cast<std::size_t>(rank), 1), 0});
  std::size_t count = 1;
  for (int s = 0; s < rank; ++s) count *= static_cast<std::size_t>(n);
  for (std::size_t flat = 0; flat < count; ++flat) {
    TensorKey key;
    std::size_t rem = flat;
    key.slots.resize(static_cast<std::size_t>(rank));
    for (int s = rank - 1; s >= 0; --s) {
      key.slots[s] = Mask{1} << (rem % n);
      rem /= n;
    }
    t.set(key, random_smooth(rng, c));
  }
  return t;
}

std::vector<Chart> sphere_charts(Suite& s, Rng& rng) {
  auto charts = charts_for(s.options(), {"sphere2"});
  const Chart c = builtin_chart("sphere2");
  charts.push_back(c.with_contorsion(random_contorsion(rng, c)));
  return charts;
}

std::vector<Chart> contorted_charts(Rng& rng) {
  std::vector<Chart> out;
  for (const char* name : {"sphere2", "polar2"}) {
    const Chart c = builtin_chart(name);
    out.push_back(c.with_contorsion(random_contorsion(rng, c)));
  }
  return out;
}

std::vector<double> unit(int n, int i) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[i] = 1.0;
  return v;
}

double scalar(const Multivector& m) { return m.c[0]; }

}  // namespace

void tensor_suite(Suite& s) {
  s.run("derivative_chain_vs_components", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = sphere_charts(s, rng);
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      for (int rank = 2; rank <= 3; ++rank) {
        for (int t = 0; t < s.samples(); ++t) {
          PointContext ctx(c, random_point(rng, c));
          const TensorField tf = random_tensor(rng, c, cf.frame, rank);
          const TensorOp op = as_op(tf);
          for (bool upper : {false, true}) {
            const auto comps = tensor_derivative_components(ctx, tf, Conn::Chart, upper);
            const std::size_t count = comps.size() / static_cast<std::size_t>(n);
            std::vector<double> chain(comps.size());
            for (int i = 0; i < n; ++i) {
              for (std::size_t flat = 0; flat < count; ++flat) {
                std::vector<FieldPtr> args(static_cast<std::size_t>(rank));
                std::size_t rem = flat;
                for (int sl = rank - 1; sl >= 0; --sl) {
                  const int j = static_cast<int>(rem % n);
                  args[sl] = upper ? reciprocal_field(n, cf.frame, j) : basis_field(n, cf.frame, Mask{1} << j);
                  rem /= n;
                }
                chain[static_cast<std::size_t>(i) * count + flat] =
                    scalar(tensor_derivative_chain(ctx, op, unit(n, i), args));
              }
            }
            acc.add(rel_dev(chain, comps));
          }
          acc.sample();
        }
      }
    }
  });

  s.run("metric_derivative_zero", 1e-10, [&](Rng& rng, Acc& acc) {
    auto charts = charts_for(s.options(), {"sphere2", "polar2"});
    for (auto& c : contorted_charts(rng)) charts.push_back(std::move(c));
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      const TensorField g = metric_tensor(c, cf.frame);
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        for (double v : tensor_derivative_components(ctx, g)) acc.add(std::abs(v));
        const FieldPtr a = random_field(rng, c, cf.frame, 1);
        const FieldPtr b = random_field(rng, c, cf.frame, 1);
        const Multivector d = tensor_derivative_chain(ctx, as_op(g), random_vector(rng, n), {a, b});
        acc.add(max_abs(d) / std::max({1.0, max_abs(a->at(ctx)), max_abs(b->at(ctx))}));
        acc.sample();
      }
    }
  });

  s.run("derivative_commutes_with_contraction", 1e-9, [&](Rng& rng, Acc& acc) {
    const auto charts = contorted_charts(rng);
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const TensorField tf = random_tensor(rng, c, cf.frame, 3);
        const FieldPtr x = random_field(rng, c, cf.frame, 1);
        const auto a = random_vector(rng, n);
        const Multivector lhs = tensor_derivative_chain(ctx, contract_op(as_op(tf), 0, 1, n), a, {x});
        Multivector rhs(n);
        for (int i = 0; i < n; ++i) {
          rhs += tensor_derivative_chain(ctx, as_op(tf), a,
                                         {basis_field(n, cf.frame, Mask{1} << i), reciprocal_field(n, cf.frame, i), x});
        }
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });

  s.run("contorsion_tensor", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = contorted_charts(rng);
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      const TensorField q = contorsion_tensor(c, cf.frame);
      const TensorOp op = as_op(q);
      for (int t = 0; t < s.samples(); ++t) {
        const auto p = random_point(rng, c);
        PointContext ctx(c, p);
        const FieldPtr x = random_field(rng, c, cf.frame, 1);
        const FieldPtr phi = random_field(rng, c, cf.frame, 0);
        for (int i = 0; i < n; ++i) {
          const Multivector ei = Multivector::blade(n, Mask{1} << i);
          const Multivector via_tensor = tensor_eval(q, {ei, x->at(ctx)}, ctx);
          acc.add(rel_dev(via_tensor, contorsion_apply(c, unit(n, i), x, p)));
          const FieldPtr ef = constant_field(cf.frame, ei);
          const Multivector scaled = op.apply({ef, gp(phi, x)})->at(ctx);
          acc.add(rel_dev(scaled, scalar(phi->at(ctx)) * op.apply({ef, x})->at(ctx)));
        }
        acc.sample();
      }
    }
  });

  s.run("derivative_pointwise_linear", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = contorted_charts(rng);
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const TensorField tf = random_tensor(rng, c, cf.frame, 2);
        const FieldPtr x = random_field(rng, c, cf.frame, 1);
        const FieldPtr y = random_field(rng, c, cf.frame, 1);
        const FieldPtr phi = random_field(rng, c, cf.frame, 0);
        const auto a = random_vector(rng, c.dim());
        const Multivector lhs = tensor_derivative_chain(ctx, as_op(tf), a, {gp(phi, x), y});
        const Multivector rhs = scalar(phi->at(ctx)) * tensor_derivative_chain(ctx, as_op(tf), a, {x, y});
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });

  s.run("derivative_product_rule", 1e-9, [&](Rng& rng, Acc& acc) {
    auto charts = sphere_charts(s, rng);
    for (auto& c : contorted_charts(rng)) charts.push_back(std::move(c));
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const TensorField ta = random_tensor(rng, c, cf.frame, 1);
        const TensorField tb = random_tensor(rng, c, cf.frame, 2);
        const FieldPtr x = random_field(rng, c, cf.frame, 1);
        const FieldPtr y = random_field(rng, c, cf.frame, 1);
        const FieldPtr z = random_field(rng, c, cf.frame, 1);
        const auto a = random_vector(rng, c.dim());
        const double lhs = scalar(tensor_derivative_chain(ctx, as_op(tensor_product(ta, tb)), a, {x, y, z}));
        const double rhs = scalar(tensor_derivative_chain(ctx, as_op(ta), a, {x})) * scalar(as_op(tb).apply({y, z})->at(ctx)) +
                           scalar(as_op(ta).apply({x})->at(ctx)) * scalar(tensor_derivative_chain(ctx, as_op(tb), a, {y, z}));
        acc.add(rel_dev(lhs, rhs));
        acc.sample();
      }
    }
  });

  // T_ab = (e_a . E^j)(e_b . E^k) T'_jk with T'_jk = T(E_j, E_k).
  s.run("component_transformation", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = charts_for(s.options(), {"sphere2", "polar2"});
    for (const auto& c : charts) {
      const int n = c.dim();
      for (const auto& [frame, m] : c.frames) {
        if (frame == "coord") continue;
        for (int t = 0; t < s.samples(); ++t) {
          PointContext ctx(c, random_point(rng, c));
          const TensorField tf = random_tensor(rng, c, "coord", 2);
          const auto& coord = ctx.gram<double>("coord");
          const auto& other = ctx.gram<double>(frame);
          const SqMat<double> recip = reciprocal_frame(other.F, Gram(other.G));
          SqMat<double> tp(n);
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
              const Multivector ej = reexpress(basis_field(n, frame, Mask{1} << j), "coord")->at(ctx);
              const Multivector ek = reexpress(basis_field(n, frame, Mask{1} << k), "coord")->at(ctx);
              tp(j, k) = scalar(tensor_eval(tf, {ej, ek}, ctx));
            }
          SqMat<double> w(n);  // e_a . E^j
          for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
              for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) w(a, j) += coord.F(a, k) * coord.G(k, l) * recip(j, l);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              double v = 0.0;
              for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) v += w(a, j) * w(b, k) * tp(j, k);
              const double direct =
                  scalar(tensor_eval(tf, {Multivector::blade(n, Mask{1} << a), Multivector::blade(n, Mask{1} << b)}, ctx));
              acc.add(rel_dev(v, direct));
            }
          acc.sample();
        }
      }
    }
  });

  s.run("index_raising", 1e-10, [&](Rng& rng, Acc& acc) {
    const auto charts = charts_for(s.options(), {"sphere2", "polar2"});
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const TensorField tf = random_tensor(rng, c, cf.frame, 2);
        const auto& g = ctx.gram<double>(cf.frame);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            Multivector ri(n);
            for (int l = 0; l < n; ++l) ri.c[Mask{1} << l] = g.ginv(i, l);
            const double lhs = scalar(tensor_eval(tf, {ri, Multivector::blade(n, Mask{1} << j)}, ctx));
            double rhs = 0.0;
            for (int k = 0; k < n; ++k)
              rhs += g.ginv(i, k) *
                     scalar(tensor_eval(tf, {Multivector::blade(n, Mask{1} << k), Multivector::blade(n, Mask{1} << j)}, ctx));
            acc.add(rel_dev(lhs, rhs));
          }
        acc.sample();
      }
    }
  });

  s.run("conjugate_commutes_with_derivative", 1e-9, [&](Rng& rng, Acc& acc) {
    auto charts = sphere_charts(s, rng);
    for (auto& c : contorted_charts(rng)) charts.push_back(std::move(c));
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      for (int t = 0; t < s.samples(); ++t) {
        PointContext ctx(c, random_point(rng, c));
        const int k = rng.integer(1, n);
        const FieldDef b = random_field_def(rng, c, cf.frame, k);
        std::vector<Multivector> vs;
        for (int i = 0; i < k; ++i) vs.push_back(random_multivector(rng, n, 1));
        acc.add(conjugate_derivative_check(ctx, b, random_vector(rng, n), vs));
        acc.sample();
      }
    }
  });

  s.run("conjugate_values", 1e-12, [&](Rng& rng, Acc& acc) {
    const Chart e2 = builtin_chart("euclid2");
    PointContext ctx(e2, {0.3, -0.2});
    const FieldDef biv{"coord", {{0b11, Expr::number(1.0)}}};
    const TensorField hat = tensor_conjugate(e2, biv);
    const Multivector e1 = Multivector::blade(2, 0b01);
    const Multivector ee2 = Multivector::blade(2, 0b10);
    acc.add(std::abs(scalar(tensor_eval(hat, {e1, ee2}, ctx)) - 1.0));
    acc.add(std::abs(scalar(tensor_eval(hat, {ee2, e1}, ctx)) + 1.0));
    acc.sample();
    const auto charts = charts_for(s.options(), {"sphere2", "polar2"});
    for (const auto& cf : frames_of(charts)) {
      const Chart& c = *cf.chart;
      const int n = c.dim();
      for (int t = 0; t < s.samples(); ++t) {
        PointContext x(c, random_point(rng, c));
        const FieldDef b = random_field_def(rng, c, cf.frame, 1);
        const Multivector bv = field_from_def(c, b)->at(x);
        const Multivector a = random_multivector(rng, n, 1);
        const Gram g(x.gram<double>(cf.frame).g);
        acc.add(rel_dev(scalar(tensor_eval(tensor_conjugate(c, b), {a}, x)), scalar(dot(bv, a, g))));
        acc.add(rel_dev(scalar(tensor_eval(metric_tensor(c, cf.frame), {a, bv}, x)), scalar(dot(a, bv, g))));
        acc.sample();
      }
    }
  });
}

}  // namespace gcalc::checks
