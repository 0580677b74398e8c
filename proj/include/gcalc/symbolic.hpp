#pragma once

// Expression-level arithmetic with literal folding, used to build component
// expressions (frame Grams, inverse metrics, tensor components) from chart data.

#include <vector>

#include "gcalc/expr.hpp"
#include "gcalc/linalg.hpp"

namespace gcalc::sym {

using expr::Expr;

Expr num(double v);
bool is_literal(const Expr& e, double v);

Expr add(const Expr& a, const Expr& b);
Expr sub(const Expr& a, const Expr& b);
Expr mul(const Expr& a, const Expr& b);
Expr div(const Expr& a, const Expr& b);
Expr neg(const Expr& a);

SqMat<Expr> identity(int n);
SqMat<Expr> matmul(const SqMat<Expr>& a, const SqMat<Expr>& b);
// F G F^T with the lower triangle mirrored from the upper.
SqMat<Expr> congruence(const SqMat<Expr>& f, const SqMat<Expr>& g);
Expr minor_det(const SqMat<Expr>& m, const std::vector<int>& rows, const std::vector<int>& cols);
Expr det(const SqMat<Expr>& m);
// Adjugate over determinant.
SqMat<Expr> inverse(const SqMat<Expr>& m);

}  // namespace gcalc::sym
