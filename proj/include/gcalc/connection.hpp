#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcalc/field.hpp"
#include "gcalc/manifold.hpp"

namespace gcalc {

// Gamma_ijk = Levi-Civita part from frame-metric derivatives and Lie
// coefficients, plus the chart contorsion (given in the coordinate frame,
// transformed tensorially into the requested frame).
ConnectionAt connection_at(const Chart& chart, const std::string& frame, std::span<const double> point,
                           Conn kind = Conn::Chart);

// tau(a, b) = D_a b - D_b a - [a, b] for vector fields in one frame; frame components.
std::vector<double> torsion(const Chart& chart, const FieldPtr& a, const FieldPtr& b, std::span<const double> point);

// D_{e_i} e^j = R[i,j,l] e^l with R[i,j,l] = -Gamma_ilm g^{mj}.
std::vector<double> reciprocal_gamma(const ConnectionAt& conn);

// Q_a A = D_a A - nabla_a A.
Multivector contorsion_apply(const Chart& chart, std::span<const double> a, const FieldPtr& field,
                             std::span<const double> point);

}  // namespace gcalc
