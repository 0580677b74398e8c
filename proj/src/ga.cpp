#include "gcalc/ga.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace gcalc {

namespace {

// Images of every blade under the vector map e_i -> sum_a m(i,a) u_a, built
// blade by blade from the lowest index: f(e_A) = f(e_i) ^ f(e_A').
std::vector<double> outermorphism_table(const SqMat<double>& m) {
  const int n = m.n;
  const std::size_t count = std::size_t{1} << n;
  std::vector<Multivector> img(count);
  img[0] = Multivector::scalar(n, 1.0);
  for (Mask blade = 1; blade < count; ++blade) {
    const int i = std::countr_zero(blade);
    Multivector v(n);
    for (int a = 0; a < n; ++a) v.c[Mask{1} << a] = m(i, a);
    img[blade] = wedge(v, img[blade & (blade - 1)]);
  }
  std::vector<double> table(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) table[i * count + j] = img[i].c[j];
  }
  return table;
}

}  // namespace

Gram::Gram(SqMat<double> g) : g_(std::move(g)) {
  const int n = g_.n;
  if (n < 1 || n > kMaxAlgebraDim) throw DimMismatch("Gram dimension out of range");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double s = 0.5 * (g_(i, j) + g_(j, i));
      g_(i, j) = s;
      g_(j, i) = s;
    }
  }
  Eigen::MatrixXd em(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) em(i, j) = g_(i, j);
  }
  if (!em.allFinite()) throw SingularGram("Gram has non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(em);
  const Eigen::VectorXd lam = es.eigenvalues();
  const double big = lam.cwiseAbs().maxCoeff();
  if (big == 0.0) throw SingularGram("Gram is zero");
  lambda_.resize(static_cast<std::size_t>(n));
  q_ = SqMat<double>(n);
  det_ = 1.0;
  for (int a = 0; a < n; ++a) {
    if (std::abs(lam(a)) < 1e-12 * big) throw SingularGram("Gram eigenvalue below tolerance");
    lambda_[a] = lam(a);
    det_ *= lam(a);
    for (int i = 0; i < n; ++i) q_(i, a) = es.eigenvectors()(i, a);
  }
  inv_ = SqMat<double>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a) acc += q_(i, a) * q_(j, a) / lambda_[a];
      inv_(i, j) = acc;
      inv_(j, i) = acc;
    }
  }
  outer_ = outermorphism_table(q_);
}

Gram Gram::diagonal(const std::vector<double>& d) {
  SqMat<double> m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return Gram(m);
}

Multivector Gram::to_eigen(const Multivector& a) const {
  const std::size_t count = a.size();
  Multivector r(a.n);
  for (std::size_t i = 0; i < count; ++i) {
    if (a.c[i] == 0.0) continue;
    for (std::size_t j = 0; j < count; ++j) r.c[j] += a.c[i] * outer_[i * count + j];
  }
  return r;
}

Multivector Gram::from_eigen(const Multivector& a) const {
  const std::size_t count = a.size();
  Multivector r(a.n);
  for (std::size_t i = 0; i < count; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < count; ++j) acc += outer_[i * count + j] * a.c[j];
    r.c[i] = acc;
  }
  return r;
}

Multivector gp(const Multivector& a, const Multivector& b, const Gram& g) {
  a.check_same(b);
  if (g.dim() != a.n) throw DimMismatch("Gram dimension differs from multivector dimension");
  const Multivector x = g.to_eigen(a);
  const Multivector y = g.to_eigen(b);
  const auto& lam = g.eigenvalues();
  Multivector r(a.n);
  for (Mask i = 0; i < x.size(); ++i) {
    if (x.c[i] == 0.0) continue;
    for (Mask j = 0; j < y.size(); ++j) {
      if (y.c[j] == 0.0) continue;
      double s = reorder_sign(i, j);
      for (Mask common = i & j; common != 0; common &= common - 1) s *= lam[std::countr_zero(common)];
      r.c[i ^ j] += s * x.c[i] * y.c[j];
    }
  }
  return g.from_eigen(r);
}

Multivector dot(const Multivector& a, const Multivector& b, const Gram& g) {
  Multivector r(a.n);
  for (int j = 0; j <= a.n; ++j) {
    const Multivector aj = grade(a, j);
    if (max_abs(aj) == 0.0) continue;
    for (int k = j; k <= a.n; ++k) r += grade(gp(aj, grade(b, k), g), k - j);
  }
  return r;
}

Multivector pseudoscalar(const Gram& g, int orientation) {
  const int n = g.dim();
  return Multivector::blade(n, (Mask{1} << n) - 1, orientation / std::sqrt(std::abs(g.det())));
}

Multivector dual(const Multivector& a, const Gram& g, int orientation) {
  const Multivector ps = pseudoscalar(g, orientation);
  const Multivector rev = reverse(ps);
  const double norm = gp(ps, rev, g).c[0];
  return gp(a, (1.0 / norm) * rev, g);
}

double max_abs(const Multivector& a) {
  double m = 0.0;
  for (double x : a.c) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const Multivector& a, const Multivector& b) { return max_abs(a - b); }

SqMat<double> reciprocal_frame(const SqMat<double>& f, const Gram& g_coord) {
  if (f.n != g_coord.dim()) throw DimMismatch("frame and Gram dimensions differ");
  const SqMat<double> gf = congruence(f, g_coord.g());
  SqMat<double> inv;
  double det = 0.0;
  if (!invert(f, inv, det)) throw SingularFrame("frame rows are linearly dependent");
  if (!invert(gf, inv, det)) throw SingularFrame("frame Gram is singular");
  return matmul(inv, f);
}

TraceRot trace_rot(const LinMap& f, const Gram& g) {
  const int n = g.dim();
  TraceRot r;
  r.rot = Multivector(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r.trace += f.f(i, j) * g(i, j);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      r.rot.c[(Mask{1} << i) | (Mask{1} << j)] = f.f(i, j) - f.f(j, i);
    }
  }
  return r;
}

Tsa tsa_decompose(const LinMap& f, const Gram& g) {
  const int n = g.dim();
  Tsa r;
  r.trace = trace_rot(f, g).trace;
  r.antisym.f = SqMat<double>(n);
  r.traceless_sym.f = SqMat<double>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r.antisym.f(i, j) = 0.5 * (f.f(i, j) - f.f(j, i));
      r.traceless_sym.f(i, j) = 0.5 * (f.f(i, j) + f.f(j, i)) - r.trace / n * g.inv()(i, j);
    }
  }
  return r;
}

std::vector<double> apply(const LinMap& f, const Gram& g, const std::vector<double>& a) {
  const int n = g.dim();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double w = a[i] * g(i, k);
      if (w == 0.0) continue;
      for (int j = 0; j < n; ++j) out[j] += w * f.f(k, j);
    }
  }
  return out;
}

LinMap change_basis(const LinMap& f, const Gram& g, const SqMat<double>& p) {
  // E^i = W^i_k e^k with W = G'^{-1} P g, G' = P g P^T.
  const Gram gp_new(congruence(p, g.g()));
  const SqMat<double> w = matmul(gp_new.inv(), matmul(p, g.g()));
  return LinMap{matmul(matmul(w, f.f), transpose(w))};
}

std::string blade_key(Mask m) {
  std::string out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (!(m & 1)) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out;
}

Mask parse_blade_key(const std::string& key, int n) {
  Mask m = 0;
  if (key.empty()) return m;
  std::stringstream ss(key);
  std::string part;
  int last = 0;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw ManifestError("malformed blade key '" + key + "'");
    }
    if (used != part.size() || idx < 1 || idx > n) throw ManifestError("blade index out of range in '" + key + "'");
    if (idx <= last) throw ManifestError("blade key indices must be strictly ascending: '" + key + "'");
    last = idx;
    m |= Mask{1} << (idx - 1);
  }
  return m;
}

}  // namespace gcalc
