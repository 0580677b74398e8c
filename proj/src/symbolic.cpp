#include "gcalc/symbolic.hpp"

namespace gcalc::sym {

using expr::BinOp;
using expr::Kind;

Expr num(double v) { return v == 0.0 ? Expr() : Expr::number(v); }

bool is_literal(const Expr& e, double v) { return e.kind() == Kind::Number && e.number_value() == v; }

namespace {
bool is_number(const Expr& e) { return e.kind() == Kind::Number; }
}  // namespace

Expr add(const Expr& a, const Expr& b) {
  if (is_literal(a, 0.0)) return b;
  if (is_literal(b, 0.0)) return a;
  if (is_number(a) && is_number(b)) return num(a.number_value() + b.number_value());
  return a + b;
}

Expr sub(const Expr& a, const Expr& b) {
  if (is_literal(b, 0.0)) return a;
  if (is_literal(a, 0.0)) return neg(b);
  if (is_number(a) && is_number(b)) return num(a.number_value() - b.number_value());
  return a - b;
}

Expr mul(const Expr& a, const Expr& b) {
  if (is_literal(a, 0.0) || is_literal(b, 0.0)) return Expr();
  if (is_literal(a, 1.0)) return b;
  if (is_literal(b, 1.0)) return a;
  if (is_literal(a, -1.0)) return neg(b);
  if (is_literal(b, -1.0)) return neg(a);
  if (is_number(a) && is_number(b)) return num(a.number_value() * b.number_value());
  return a * b;
}

Expr div(const Expr& a, const Expr& b) {
  if (is_literal(a, 0.0)) return Expr();
  if (is_literal(b, 1.0)) return a;
  if (is_number(a) && is_number(b) && b.number_value() != 0.0) return num(a.number_value() / b.number_value());
  return a / b;
}

Expr neg(const Expr& a) {
  if (is_number(a)) return num(-a.number_value());
  if (a.kind() == Kind::Neg) return a.lhs();
  return -a;
}

SqMat<Expr> identity(int n) {
  SqMat<Expr> m(n);
  for (int i = 0; i < n; ++i) m(i, i) = num(1.0);
  return m;
}

SqMat<Expr> matmul(const SqMat<Expr>& a, const SqMat<Expr>& b) {
  SqMat<Expr> r(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      Expr acc;
      for (int k = 0; k < a.n; ++k) acc = add(acc, mul(a(i, k), b(k, j)));
      r(i, j) = acc;
    }
  }
  return r;
}

SqMat<Expr> congruence(const SqMat<Expr>& f, const SqMat<Expr>& g) {
  const SqMat<Expr> fg = matmul(f, g);
  SqMat<Expr> r(f.n);
  for (int i = 0; i < f.n; ++i) {
    for (int j = i; j < f.n; ++j) {
      Expr acc;
      for (int k = 0; k < f.n; ++k) acc = add(acc, mul(fg(i, k), f(j, k)));
      r(i, j) = acc;
      r(j, i) = acc;
    }
  }
  return r;
}

Expr minor_det(const SqMat<Expr>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return num(1.0);
  if (k == 1) return m(rows[0], cols[0]);
  Expr acc;
  const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    if (is_literal(m(rows[0], cols[c]), 0.0)) continue;
    std::vector<int> sub_cols;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != c) sub_cols.push_back(cols[j]);
    }
    const Expr term = mul(m(rows[0], cols[c]), minor_det(m, sub_rows, sub_cols));
    acc = (c % 2 == 0) ? add(acc, term) : sub(acc, term);
  }
  return acc;
}

Expr det(const SqMat<Expr>& m) {
  std::vector<int> idx(static_cast<std::size_t>(m.n));
  for (int i = 0; i < m.n; ++i) idx[i] = i;
  return minor_det(m, idx, idx);
}

SqMat<Expr> inverse(const SqMat<Expr>& m) {
  const int n = m.n;
  const Expr d = det(m);
  SqMat<Expr> r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // inverse(i, j) = (-1)^{i+j} M_{ji} / det
      std::vector<int> rows;
      std::vector<int> cols;
      for (int k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Expr cof = minor_det(m, rows, cols);
      if ((i + j) % 2) cof = neg(cof);
      r(i, j) = div(cof, d);
    }
  }
  return r;
}

}  // namespace gcalc::sym
