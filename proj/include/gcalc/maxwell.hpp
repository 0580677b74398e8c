#pragma once

// Field strength F = grad ^ A, the identity grad ^ F = 0 and the source
// J = grad . F for a potential given over the gradient basis dx^mu.

#include <map>
#include <span>

#include "gcalc/manifold.hpp"

namespace gcalc {

struct MaxwellResult {
  Multivector F;    // over dx^J
  double dF = 0.0;  // max |grad ^ F|
  Multivector J;    // over coordinate vectors e(x_mu)
};

MaxwellResult maxwell(const Chart& chart, const std::map<Mask, Expr>& potential, std::span<const double> point);

}  // namespace gcalc
