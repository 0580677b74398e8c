#pragma once

// Point evaluation of the multivector directional derivative and the
// operators built from it. Fields must live in the frame being used; the
// direction is given by frame components at the point.

#include <span>
#include <vector>

#include "gcalc/field.hpp"
#include "gcalc/manifold.hpp"

namespace gcalc {

Multivector mdd(const Chart& chart, const FieldPtr& field, std::span<const double> a, std::span<const double> point,
                Conn kind = Conn::Chart);
Multivector gradient(const Chart& chart, const FieldPtr& field, std::span<const double> point, Conn kind = Conn::Chart);
Multivector divergence(const Chart& chart, const FieldPtr& field, std::span<const double> point, Conn kind = Conn::Chart);
Multivector curl(const Chart& chart, const FieldPtr& field, std::span<const double> point, Conn kind = Conn::Chart);
Multivector ext_d(const Chart& chart, const FieldPtr& field, std::span<const double> point);
// Divergence route.
Multivector codifferential(const Chart& chart, const FieldPtr& field, std::span<const double> point,
                           Conn kind = Conn::Chart);

// Both codifferential routes: div A and *d*A, with the global sign s that
// best maps one onto the other (s = +-1) and the residual after applying it.
struct CodiffRoutes {
  Multivector divergence;
  Multivector star_d_star;
  double sign = 1.0;
  double residual = 0.0;
};
CodiffRoutes codifferential_routes(const Chart& chart, const FieldPtr& field, std::span<const double> point);

struct SecondOps {
  Multivector grad_grad;     // D(DA)
  Multivector directional;   // (a . D) A
  Multivector square;        // (D^2) A    = (e^i e^j) D_i D_j A
  Multivector dot_dot;       // (D . D) A  = (e^i . e^j) D_i D_j A
  Multivector wedge_wedge;   // (D ^ D) A  = (e^i ^ e^j) D_i D_j A
  Multivector wedge_dot;     // (D ^ D) . A = (e^i ^ e^j) . (D_i D_j A)
};
SecondOps second_ops(const Chart& chart, const FieldPtr& field, std::span<const double> a, std::span<const double> point,
                     Conn kind = Conn::Chart);

}  // namespace gcalc
