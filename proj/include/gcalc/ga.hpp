#pragma once

// Clifford algebra over an arbitrary symmetric nondegenerate Gram matrix.
//
// Multivectors are dense coefficient arrays over the 2^n wedge blades
// e_J = e_{j1} ^ ... ^ e_{jk} (j1 < ... < jk), indexed by bitmask. The double
// API (gp, dot, dual) runs through the eigenbasis of the Gram; the templated
// *_t variants straighten products directly against a Gram over any scalar
// ring so that jet-valued Grams can be differentiated through.

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gcalc/dual.hpp"
#include "gcalc/error.hpp"
#include "gcalc/linalg.hpp"

namespace gcalc {

using Mask = std::uint32_t;

inline constexpr int kMaxAlgebraDim = 12;

inline int grade_of(Mask m) { return std::popcount(m); }

// Sign picked up when the concatenation of ascending index lists a, b is
// sorted (only meaningful for disjoint a, b; overlap handled by callers).
inline double reorder_sign(Mask a, Mask b) {
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1.0 : 1.0;
}

inline double reverse_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0; }

template <class S>
struct MV {
  int n = 0;
  std::vector<S> c;

  MV() = default;
  explicit MV(int dim) : n(dim), c(std::size_t{1} << dim, S{}) {}

  static MV blade(int dim, Mask m, S coeff = S(1.0)) {
    MV r(dim);
    r.c[m] = coeff;
    return r;
  }
  static MV scalar(int dim, S s) { return blade(dim, 0, s); }
  template <class V>
  static MV vector(int dim, const V& comps) {
    MV r(dim);
    for (int i = 0; i < dim; ++i) r.c[Mask{1} << i] = comps[static_cast<std::size_t>(i)];
    return r;
  }

  std::size_t size() const { return c.size(); }
  S& operator[](Mask m) { return c[m]; }
  const S& operator[](Mask m) const { return c[m]; }

  MV& operator+=(const MV& o) {
    check_same(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  MV& operator-=(const MV& o) {
    check_same(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  void check_same(const MV& o) const {
    if (o.n != n) throw DimMismatch("multivector dimensions differ");
  }
};

using Multivector = MV<double>;

template <class S>
MV<S> operator+(MV<S> a, const MV<S>& b) { return a += b; }
template <class S>
MV<S> operator-(MV<S> a, const MV<S>& b) { return a -= b; }
template <class S>
MV<S> operator-(MV<S> a) {
  for (auto& x : a.c) x = -x;
  return a;
}
template <class S, class T>
MV<S> operator*(const T& s, MV<S> a) {
  for (auto& x : a.c) x = s * x;
  return a;
}

template <class S>
MV<S> grade(const MV<S>& a, int k) {
  MV<S> r(a.n);
  if (k < 0 || k > a.n) return r;
  for (Mask m = 0; m < a.size(); ++m) {
    if (grade_of(m) == k) r.c[m] = a.c[m];
  }
  return r;
}

template <class S>
MV<S> reverse(MV<S> a) {
  for (Mask m = 0; m < a.size(); ++m) a.c[m] = reverse_sign(grade_of(m)) * a.c[m];
  return a;
}

template <class S>
MV<S> wedge(const MV<S>& a, const MV<S>& b) {
  a.check_same(b);
  MV<S> r(a.n);
  for (Mask x = 0; x < a.size(); ++x) {
    for (Mask y = 0; y < b.size(); ++y) {
      if (x & y) continue;
      r.c[x | y] += reorder_sign(x, y) * (a.c[x] * b.c[y]);
    }
  }
  return r;
}

// e_i _| Y + e_i ^ Y for basis vector e_i under Gram g.
template <class S>
MV<S> basis_vector_product(int i, const MV<S>& y, const SqMat<S>& g) {
  MV<S> r(y.n);
  const Mask bit = Mask{1} << i;
  for (Mask k = 0; k < y.size(); ++k) {
    if (!(k & bit)) r.c[k | bit] += reorder_sign(bit, k) * y.c[k];
    int m = 0;
    for (int j = 0; j < y.n; ++j) {
      const Mask jb = Mask{1} << j;
      if (!(k & jb)) continue;
      const double sign = (m & 1) ? -1.0 : 1.0;
      r.c[k ^ jb] += sign * (g(i, j) * y.c[k]);
      ++m;
    }
  }
  return r;
}

// Vector left contraction a _| B for a vector a given by components.
template <class S>
MV<S> lc_vector(const std::vector<S>& a, const MV<S>& b, const SqMat<S>& g) {
  MV<S> r(b.n);
  std::vector<S> ag(static_cast<std::size_t>(b.n), S{});
  for (int j = 0; j < b.n; ++j) {
    for (int i = 0; i < b.n; ++i) ag[j] += a[i] * g(i, j);
  }
  for (Mask k = 0; k < b.size(); ++k) {
    int m = 0;
    for (int j = 0; j < b.n; ++j) {
      const Mask jb = Mask{1} << j;
      if (!(k & jb)) continue;
      const double sign = (m & 1) ? -1.0 : 1.0;
      r.c[k ^ jb] += sign * (ag[j] * b.c[k]);
      ++m;
    }
  }
  return r;
}

// Geometric product by straightening: with i the lowest index of blade A and
// A' the rest, e_A M = e_i (e_A' M) - (e_i _| e_A') M.
template <class S>
MV<S> gp_t(const MV<S>& a, const MV<S>& b, const SqMat<S>& g) {
  a.check_same(b);
  if (g.n != a.n) throw DimMismatch("Gram dimension differs from multivector dimension");
  const std::size_t count = a.size();
  std::vector<MV<S>> p(count);
  p[0] = b;
  MV<S> r = a.c[0] * b;
  for (Mask blade = 1; blade < count; ++blade) {
    const int i = std::countr_zero(blade);
    const Mask rest = blade & (blade - 1);
    MV<S> cur = basis_vector_product(i, p[rest], g);
    int m = 0;
    for (int j = 0; j < a.n; ++j) {
      const Mask jb = Mask{1} << j;
      if (!(rest & jb)) continue;
      const double sign = (m & 1) ? 1.0 : -1.0;
      cur += (sign * g(i, j)) * p[rest ^ jb];
      ++m;
    }
    r += a.c[blade] * cur;
    p[blade] = std::move(cur);
  }
  return r;
}

template <class S>
MV<S> dot_t(const MV<S>& a, const MV<S>& b, const SqMat<S>& g) {
  MV<S> r(a.n);
  for (int j = 0; j <= a.n; ++j) {
    const MV<S> aj = grade(a, j);
    for (int k = j; k <= a.n; ++k) r += grade(gp_t(aj, grade(b, k), g), k - j);
  }
  return r;
}

// Unit pseudoscalar orientation * e_{1..n} / sqrt|det g| and its inverse.
template <class S>
std::pair<MV<S>, MV<S>> pseudoscalar_t(const SqMat<S>& g, double orientation) {
  const int n = g.n;
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  const S det = minor_det(g, idx, idx);
  if (value_of(det) == 0.0) throw SingularGram("Gram determinant vanishes");
  const S mag = sqrt_jet(abs_jet(det));
  const Mask top = (Mask{1} << n) - 1;
  MV<S> ps = MV<S>::blade(n, top, S(orientation) / mag);
  const MV<S> rev = reverse(ps);
  const S norm = gp_t(ps, rev, g).c[0];
  MV<S> inv = (S(1.0) / norm) * rev;
  return {ps, inv};
}

template <class S>
MV<S> dual_t(const MV<S>& a, const SqMat<S>& g, double orientation) {
  return gp_t(a, pseudoscalar_t(g, orientation).second, g);
}

// Double-precision Gram with cached inverse, eigenbasis and the outermorphism
// of the eigenbasis change (2^n x 2^n, block diagonal by grade).
class Gram {
 public:
  explicit Gram(SqMat<double> g);
  static Gram identity(int n) { return Gram(SqMat<double>::identity(n)); }
  static Gram diagonal(const std::vector<double>& d);

  int dim() const { return g_.n; }
  const SqMat<double>& g() const { return g_; }
  const SqMat<double>& inv() const { return inv_; }
  double operator()(int i, int j) const { return g_(i, j); }
  const std::vector<double>& eigenvalues() const { return lambda_; }
  double det() const { return det_; }

  // Coefficients relative to the eigenbasis and back.
  Multivector to_eigen(const Multivector& a) const;
  Multivector from_eigen(const Multivector& a) const;

 private:
  SqMat<double> g_;
  SqMat<double> inv_;
  SqMat<double> q_;
  std::vector<double> lambda_;
  std::vector<double> outer_;
  double det_ = 0.0;
};

Multivector gp(const Multivector& a, const Multivector& b, const Gram& g);
Multivector dot(const Multivector& a, const Multivector& b, const Gram& g);
// A I^{-1}; I is orientation * e_{1..n} normalised so that |I I~| = 1.
Multivector dual(const Multivector& a, const Gram& g, int orientation = 1);
Multivector pseudoscalar(const Gram& g, int orientation = 1);

double max_abs(const Multivector& a);
double max_abs_diff(const Multivector& a, const Multivector& b);

// Reciprocal rows e^i = g^{ij} e_j for frame rows F under the coordinate Gram.
SqMat<double> reciprocal_frame(const SqMat<double>& f, const Gram& g_coord);

// Linear map with f(e^i) = f^{ij} e_j.
struct LinMap {
  SqMat<double> f;
};

struct TraceRot {
  double trace = 0.0;
  Multivector rot;
};
TraceRot trace_rot(const LinMap& f, const Gram& g);

struct Tsa {
  double trace = 0.0;
  LinMap antisym;       // f-
  LinMap traceless_sym; // f+
};
Tsa tsa_decompose(const LinMap& f, const Gram& g);

// f(a) for a = a^i e_i, returned as frame components.
std::vector<double> apply(const LinMap& f, const Gram& g, const std::vector<double>& a);

// Components of the same map with respect to the frame E_i = P_i^k e_k.
LinMap change_basis(const LinMap& f, const Gram& g, const SqMat<double>& p);

// Blade keys: ascending 1-based indices joined by commas, "" for the scalar.
std::string blade_key(Mask m);
Mask parse_blade_key(const std::string& key, int n);

}  // namespace gcalc
