#include "gcalc/forms.hpp"

namespace gcalc {

Form make_form(int n, std::map<Mask, Expr> components) { return Form{expr_field(n, kFormFrame, std::move(components))}; }

Form form_d(const Form& f) { return Form{coordinate_d_field(f.field)}; }

Form form_wedge(const Form& a, const Form& b) { return Form{wedge(a.field, b.field)}; }

Form form_add(const Form& a, const Form& b) { return Form{add(a.field, b.field)}; }

Form form_scale(const Form& a, double s) { return Form{scale(a.field, s)}; }

Form hat_map(const FieldPtr& a) {
  if (a->frame() == kFormFrame) throw FrameMismatch("hat map expects a multivector field, not a form");
  const FieldPtr in_grad = a->frame() == "grad" ? a : reexpress(a, "grad");
  return Form{retag(in_grad, kFormFrame)};
}

FieldPtr hat_inverse(const Form& f) { return retag(f.field, "grad"); }

}  // namespace gcalc
