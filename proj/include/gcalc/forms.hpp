#pragma once

// Differential forms over the coordinate form basis dx^J, with the
// coordinate exterior derivative. Independent of the metric; the bridge to
// multivectors is the componentwise map from the gradient frame.

#include <map>

#include "gcalc/field.hpp"
#include "gcalc/manifold.hpp"

namespace gcalc {

inline constexpr const char* kFormFrame = "form";

struct Form {
  FieldPtr field;  // components over dx^J, frame label kFormFrame
  int dim() const { return field->dim(); }
  Multivector at(PointContext& ctx) const { return field->at(ctx); }
};

Form make_form(int n, std::map<Mask, Expr> components);
// (dA)_{i K} by the coordinate formula, antisymmetrised into ascending order.
Form form_d(const Form& f);
Form form_wedge(const Form& a, const Form& b);
Form form_add(const Form& a, const Form& b);
Form form_scale(const Form& a, double s);

// A = sum A_K dx^K  ->  sum A_K d^x^K (A re-expressed in the gradient frame first).
Form hat_map(const FieldPtr& a);
// Inverse: a multivector field in the gradient frame.
FieldPtr hat_inverse(const Form& f);

}  // namespace gcalc
