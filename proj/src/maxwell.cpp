#include "gcalc/maxwell.hpp"

#include "gcalc/field.hpp"

namespace gcalc {

MaxwellResult maxwell(const Chart& chart, const std::map<Mask, Expr>& potential, std::span<const double> point) {
  for (const auto& [m, e] : potential) {
    if (grade_of(m) != 1) throw GradeMismatch("potential must be a vector field");
  }
  PointContext ctx(chart, std::vector<double>(point.begin(), point.end()));
  const FieldPtr a = expr_field(chart.dim(), "grad", potential);
  const FieldPtr f = ext_d_field(a);
  MaxwellResult r;
  r.F = f->at(ctx);
  r.dF = max_abs(ext_d_field(f)->at(ctx));
  r.J = reexpress(divergence_field(f, Conn::LeviCivita), "coord")->at(ctx);
  return r;
}

}  // namespace gcalc
