#include "gcalc/mdd.hpp"

#include <cmath>

namespace gcalc {

namespace {

std::vector<double> as_vec(std::span<const double> s) { return std::vector<double>(s.begin(), s.end()); }

Multivector reciprocal(const GramAt<double>& g, int i) {
  Multivector r(g.n);
  for (int l = 0; l < g.n; ++l) r.c[Mask{1} << l] = g.ginv(i, l);
  return r;
}

}  // namespace

Multivector mdd(const Chart& chart, const FieldPtr& field, std::span<const double> a, std::span<const double> point,
                Conn kind) {
  PointContext ctx(chart, as_vec(point));
  return mdd_field(field, as_vec(a), kind)->at(ctx);
}

Multivector gradient(const Chart& chart, const FieldPtr& field, std::span<const double> point, Conn kind) {
  PointContext ctx(chart, as_vec(point));
  return gradient_field(field, kind)->at(ctx);
}

Multivector divergence(const Chart& chart, const FieldPtr& field, std::span<const double> point, Conn kind) {
  PointContext ctx(chart, as_vec(point));
  return divergence_field(field, kind)->at(ctx);
}

Multivector curl(const Chart& chart, const FieldPtr& field, std::span<const double> point, Conn kind) {
  PointContext ctx(chart, as_vec(point));
  return curl_field(field, kind)->at(ctx);
}

Multivector ext_d(const Chart& chart, const FieldPtr& field, std::span<const double> point) {
  PointContext ctx(chart, as_vec(point));
  return ext_d_field(field)->at(ctx);
}

Multivector codifferential(const Chart& chart, const FieldPtr& field, std::span<const double> point, Conn kind) {
  return divergence(chart, field, point, kind);
}

CodiffRoutes codifferential_routes(const Chart& chart, const FieldPtr& field, std::span<const double> point) {
  PointContext ctx(chart, as_vec(point));
  CodiffRoutes r;
  r.divergence = divergence_field(field, Conn::LeviCivita)->at(ctx);
  r.star_d_star = dual(ext_d_field(dual(field)))->at(ctx);
  const double plus = max_abs_diff(r.star_d_star, r.divergence);
  const double minus = max_abs(r.star_d_star + r.divergence);
  r.sign = minus < plus ? -1.0 : 1.0;
  r.residual = std::min(plus, minus);
  return r;
}

SecondOps second_ops(const Chart& chart, const FieldPtr& field, std::span<const double> a, std::span<const double> point,
                     Conn kind) {
  PointContext ctx(chart, as_vec(point));
  const int n = chart.dim();
  SecondOps out;
  out.grad_grad = gradient_field(gradient_field(field, kind), kind)->at(ctx);
  out.directional = mdd_field(field, as_vec(a), kind)->at(ctx);
  out.square = Multivector(n);
  out.dot_dot = Multivector(n);
  out.wedge_wedge = Multivector(n);
  out.wedge_dot = Multivector(n);
  const GramAt<double>& g = ctx.gram<double>(field->frame());
  for (int j = 0; j < n; ++j) {
    const FieldPtr dj = mdd_basis_field(field, j, kind);
    for (int i = 0; i < n; ++i) {
      const Multivector dij = mdd_basis_field(dj, i, kind)->at(ctx);
      const Multivector ei = reciprocal(g, i);
      const Multivector ej = reciprocal(g, j);
      const Multivector prod = gp_t(ei, ej, g.g);
      const Multivector inner = dot_t(ei, ej, g.g);
      const Multivector outer = wedge(ei, ej);
      out.square += gp_t(prod, dij, g.g);
      out.dot_dot += gp_t(inner, dij, g.g);
      out.wedge_wedge += gp_t(outer, dij, g.g);
      out.wedge_dot += dot_t(outer, dij, g.g);
    }
  }
  return out;
}

}  // namespace gcalc
