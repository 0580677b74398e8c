#pragma once

// Small dense square matrices over an arbitrary scalar ring (double, jets, Expr).

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "gcalc/dual.hpp"
#include "gcalc/error.hpp"

namespace gcalc {

template <class S>
struct SqMat {
  int n = 0;
  std::vector<S> a;

  SqMat() = default;
  explicit SqMat(int dim) : n(dim), a(static_cast<std::size_t>(dim * dim), S{}) {}

  S& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  const S& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

  static SqMat identity(int dim) {
    SqMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = S(1.0);
    return m;
  }
};

template <class S>
SqMat<S> matmul(const SqMat<S>& x, const SqMat<S>& y) {
  SqMat<S> r(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      S acc(0.0);
      for (int k = 0; k < x.n; ++k) acc += x(i, k) * y(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

template <class S>
SqMat<S> transpose(const SqMat<S>& x) {
  SqMat<S> r(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) r(i, j) = x(j, i);
  }
  return r;
}

// F G F^T, upper triangle computed once and mirrored so the result is exactly symmetric.
template <class S>
SqMat<S> congruence(const SqMat<S>& f, const SqMat<S>& g) {
  const int n = f.n;
  SqMat<S> fg = matmul(f, g);
  SqMat<S> r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      S acc(0.0);
      for (int k = 0; k < n; ++k) acc += fg(i, k) * f(j, k);
      r(i, j) = acc;
      r(j, i) = acc;
    }
  }
  return r;
}

template <class S>
double max_abs(const SqMat<S>& m) {
  double r = 0.0;
  for (const auto& x : m.a) r = std::max(r, std::abs(value_of(x)));
  return r;
}

// Gauss-Jordan with partial pivoting on the value part. Returns false when a
// pivot falls below rel_tol times the matrix scale.
template <class S>
bool invert(const SqMat<S>& m, SqMat<S>& inv, S& det, double rel_tol = 1e-12) {
  const int n = m.n;
  SqMat<S> w = m;
  inv = SqMat<S>::identity(n);
  det = S(1.0);
  const double scale = max_abs(m);
  if (scale == 0.0) return false;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(value_of(w(r, col))) > std::abs(value_of(w(piv, col)))) piv = r;
    }
    if (std::abs(value_of(w(piv, col))) <= rel_tol * scale) return false;
    if (piv != col) {
      for (int k = 0; k < n; ++k) {
        std::swap(w(piv, k), w(col, k));
        std::swap(inv(piv, k), inv(col, k));
      }
      det = -det;
    }
    const S p = w(col, col);
    det *= p;
    const S pinv = S(1.0) / p;
    for (int k = 0; k < n; ++k) {
      w(col, k) *= pinv;
      inv(col, k) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const S factor = w(r, col);
      for (int k = 0; k < n; ++k) {
        w(r, k) -= factor * w(col, k);
        inv(r, k) -= factor * inv(col, k);
      }
    }
  }
  return true;
}

// Determinant of the submatrix picking rows/cols by index lists (Laplace
// expansion; sizes here never exceed 4 in practice).
template <class S>
S minor_det(const SqMat<S>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return S(1.0);
  if (k == 1) return m(rows[0], cols[0]);
  S acc(0.0);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != c) sub_cols.push_back(cols[j]);
    }
    S term = m(rows[0], cols[c]) * minor_det(m, sub_rows, sub_cols);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace gcalc
