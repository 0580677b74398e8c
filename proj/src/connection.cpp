#include "gcalc/connection.hpp"

namespace gcalc {

ConnectionAt connection_at(const Chart& chart, const std::string& frame, std::span<const double> point, Conn kind) {
  PointContext ctx(chart, std::vector<double>(point.begin(), point.end()));
  return ctx.connection<double>(frame, kind);
}

std::vector<double> torsion(const Chart& chart, const FieldPtr& a, const FieldPtr& b, std::span<const double> point) {
  if (a->frame() != b->frame()) throw FrameMismatch("torsion operands live in different frames");
  const int n = chart.dim();
  PointContext ctx(chart, std::vector<double>(point.begin(), point.end()));
  const MV<Jet1> aj = a->sample<Jet1>(ctx);
  const MV<Jet1> bj = b->sample<Jet1>(ctx);
  std::vector<double> av(static_cast<std::size_t>(n));
  std::vector<double> bv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    av[i] = aj.c[Mask{1} << i].v;
    bv[i] = bj.c[Mask{1} << i].v;
  }
  const Multivector da = mdd_field(b, av)->at(ctx);
  const Multivector db = mdd_field(a, bv)->at(ctx);

  // Lie bracket through coordinate components a^k = a^i F_i^k.
  const GramAt<Jet1>& fr = ctx.gram<Jet1>(a->frame());
  std::vector<Jet1> ac(static_cast<std::size_t>(n));
  std::vector<Jet1> bc(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      ac[k] += aj.c[Mask{1} << i] * fr.F(i, k);
      bc[k] += bj.c[Mask{1} << i] * fr.F(i, k);
    }
  }
  std::vector<double> br(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) br[k] += ac[l].v * bc[k].d[l] - bc[l].v * ac[k].d[l];
  }
  const GramAt<double>& f0 = ctx.gram<double>(a->frame());
  SqMat<double> finv;
  double det = 0.0;
  if (!invert(f0.F, finv, det)) throw SingularFrame("frame is singular");
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double bracket_i = 0.0;
    for (int k = 0; k < n; ++k) bracket_i += br[k] * finv(k, i);
    out[i] = da.c[Mask{1} << i] - db.c[Mask{1} << i] - bracket_i;
  }
  return out;
}

std::vector<double> reciprocal_gamma(const ConnectionAt& conn) {
  const int n = conn.n;
  std::vector<double> r(static_cast<std::size_t>(n * n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) acc -= conn.gamma[conn.at(i, l, m)] * conn.ginv(m, j);
        r[conn.at(i, j, l)] = acc;
      }
    }
  }
  return r;
}

Multivector contorsion_apply(const Chart& chart, std::span<const double> a, const FieldPtr& field,
                             std::span<const double> point) {
  PointContext ctx(chart, std::vector<double>(point.begin(), point.end()));
  const std::vector<double> dir(a.begin(), a.end());
  return mdd_field(field, dir, Conn::Chart)->at(ctx) - mdd_field(field, dir, Conn::LeviCivita)->at(ctx);
}

}  // namespace gcalc
