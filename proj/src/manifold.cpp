#include "gcalc/manifold.hpp"

#include <cmath>
#include <random>
#include <type_traits>

#include "gcalc/symbolic.hpp"

namespace gcalc {

const SqMat<Expr>& Chart::frame(const std::string& name) const {
  auto it = frames.find(name);
  if (it == frames.end()) throw FrameMismatch("unknown frame '" + name + "' in chart '" + this->name + "'");
  return it->second;
}

SqMat<Expr> parse_matrix(const std::vector<std::vector<std::string>>& rows, std::span<const std::string> coords) {
  const int n = static_cast<int>(coords.size());
  if (static_cast<int>(rows.size()) != n) throw DimMismatch("matrix must have one row per coordinate");
  SqMat<Expr> m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw DimMismatch("matrix row has wrong length");
    for (int j = 0; j < n; ++j) m(i, j) = expr::parse(rows[i][j], coords);
  }
  return m;
}

Chart make_chart(std::string name, std::vector<std::string> coords, const std::vector<std::vector<std::string>>& metric) {
  Chart c;
  c.name = std::move(name);
  c.coords = std::move(coords);
  c.metric = parse_matrix(metric, c.coords);
  c.finalize();
  return c;
}

void Chart::finalize() {
  const int n = dim();
  if (n < 1 || n > kMaxChartDim) throw DimMismatch("chart dimension must be between 1 and 4");
  if (metric.n != n) throw DimMismatch("metric size differs from the number of coordinates");
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      if (coords[a] == coords[b]) throw ManifestError("duplicate coordinate name '" + coords[a] + "'");
    }
  }
  if (domain.empty()) domain.assign(static_cast<std::size_t>(n), {-1.0, 1.0});
  if (static_cast<int>(domain.size()) != n) throw DimMismatch("domain needs one interval per coordinate");
  for (const auto& [lo, hi] : domain) {
    if (!(lo < hi)) throw ManifestError("empty domain interval");
  }

  // Symmetry: identical text, or equal values at probe points in the domain.
  std::mt19937_64 rng(0x5eed);
  std::vector<std::vector<double>> probes;
  for (int p = 0; p < 8; ++p) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      std::uniform_real_distribution<double> u(domain[k].first, domain[k].second);
      x[k] = u(rng);
    }
    probes.push_back(std::move(x));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (metric(i, j) == metric(j, i)) continue;
      for (const auto& x : probes) {
        const double a = expr::evaluate<double>(metric(i, j), x);
        const double b = expr::evaluate<double>(metric(j, i), x);
        if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) {
          throw ManifestError("metric is not symmetric at entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
        }
      }
    }
  }

  frames["coord"] = sym::identity(n);
  if (!frames.count("grad")) frames["grad"] = sym::inverse(metric);
  for (const auto& [fname, f] : frames) {
    if (f.n != n) throw DimMismatch("frame '" + fname + "' has wrong size");
    for (const auto& e : f.a) {
      if (static_cast<int>(e.coord_span()) > n) throw DimMismatch("frame expression references unknown coordinate");
    }
  }
  for (const auto& e : metric.a) {
    if (static_cast<int>(e.coord_span()) > n) throw DimMismatch("metric expression references unknown coordinate");
  }
  for (const auto& chi : contorsion) {
    if (chi.i < 0 || chi.j < 0 || chi.k < 0 || chi.i >= n || chi.j >= n || chi.k >= n) {
      throw ManifestError("contorsion index out of range");
    }
  }
  if (orientation != 1 && orientation != -1) throw ManifestError("orientation must be +1 or -1");
  for (const auto& [fname, fd] : fields) {
    if (!frames.count(fd.frame)) throw ManifestError("field '" + fname + "' references unknown frame '" + fd.frame + "'");
    for (const auto& [mask, e] : fd.components) {
      if (mask >= (Mask{1} << n)) throw ManifestError("field '" + fname + "' has an invalid blade");
      if (static_cast<int>(e.coord_span()) > n) throw DimMismatch("field expression references unknown coordinate");
    }
  }
}

Chart Chart::with_contorsion(std::vector<ContorsionEntry> chi) const {
  Chart c = *this;
  c.contorsion = std::move(chi);
  c.finalize();
  return c;
}

Chart Chart::with_metric(SqMat<Expr> g) const {
  Chart c = *this;
  c.metric = std::move(g);
  c.frames.erase("grad");
  c.finalize();
  return c;
}

// ---------------------------------------------------------------------------

PointContext::PointContext(const Chart& chart, std::vector<double> point) : chart_(&chart), point_(std::move(point)) {
  const int n = chart.dim();
  if (static_cast<int>(point_.size()) != n) throw DimMismatch("point has wrong number of coordinates");
  metric_.reserve(static_cast<std::size_t>(n * n));
  for (const auto& e : chart.metric.a) metric_.push_back(jet(e));
}

expr::Jet2 PointContext::jet(const Expr& e) const { return expr::eval_jet2(e, point_); }

const std::vector<expr::Jet2>& PointContext::frame_jets(const std::string& frame) {
  auto it = frames_.find(frame);
  if (it != frames_.end()) return it->second;
  const SqMat<Expr>& f = chart_->frame(frame);
  std::vector<expr::Jet2> jets;
  jets.reserve(f.a.size());
  for (const auto& e : f.a) jets.push_back(jet(e));
  return frames_.emplace(frame, std::move(jets)).first->second;
}

const std::vector<expr::Jet2>& PointContext::contorsion_jets() {
  if (chi_ready_) return chi_;
  const int n = dim();
  chi_.assign(static_cast<std::size_t>(n * n * n), expr::Jet2(static_cast<std::size_t>(n)));
  for (const auto& c : chart_->contorsion) {
    const expr::Jet2 v = jet(c.value);
    auto& slot = chi_[static_cast<std::size_t>((c.i * n + c.j) * n + c.k)];
    slot.value += v.value;
    for (std::size_t q = 0; q < v.grad.size(); ++q) slot.grad[q] += v.grad[q];
    for (std::size_t q = 0; q < v.hess.size(); ++q) slot.hess[q] += v.hess[q];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double a = chi_[static_cast<std::size_t>((i * n + j) * n + k)].value;
        const double b = chi_[static_cast<std::size_t>((i * n + k) * n + j)].value;
        if (std::abs(a + b) > 1e-10) throw InvalidContorsion("contorsion antisymmetry violated");
      }
    }
  }
  chi_ready_ = true;
  return chi_;
}

namespace {

template <class S>
SqMat<S> lift_matrix(const std::vector<expr::Jet2>& jets, int n) {
  SqMat<S> m(n);
  for (std::size_t q = 0; q < jets.size(); ++q) m.a[q] = expr::lift<S>(jets[q]);
  return m;
}

template <class S>
SqMat<S> lower_matrix(const SqMat<Dual<S>>& m) {
  SqMat<S> r(m.n);
  for (std::size_t q = 0; q < m.a.size(); ++q) r.a[q] = m.a[q].v;
  return r;
}

}  // namespace

template <class S>
const GramAt<S>& PointContext::gram(const std::string& frame) {
  auto& cache = std::get<Level<S>>(levels_).gram;
  auto it = cache.find(frame);
  if (it != cache.end()) return it->second;
  const int n = dim();
  GramAt<S> out;
  out.n = n;
  out.F = lift_matrix<S>(frame_jets(frame), n);
  out.G = lift_matrix<S>(metric_, n);
  out.g = congruence(out.F, out.G);
  SqMat<S> finv;
  if (!invert(out.F, finv, out.det_F)) throw SingularFrame("frame '" + frame + "' is singular at the point");
  if (!invert(out.g, out.ginv, out.det_g)) throw SingularGram("Gram of frame '" + frame + "' is singular at the point");
  return cache.emplace(frame, std::move(out)).first->second;
}

template <class S>
const FrameData<S>& PointContext::frame(const std::string& frame) {
  if constexpr (std::is_same_v<S, Jet11>) {
    throw JetBudgetExhausted("frame derivatives are not available at second-derivative level");
  } else {
    auto& cache = std::get<Level<S>>(levels_).frame;
    auto it = cache.find(frame);
    if (it != cache.end()) return it->second;
    const int n = dim();
    const GramAt<Dual<S>>& up = gram<Dual<S>>(frame);
    FrameData<S> out;
    static_cast<GramAt<S>&>(out) = gram<S>(frame);
    const std::size_t n3 = static_cast<std::size_t>(n * n * n);
    out.dg.assign(n3, S{});
    out.bracket.assign(n3, S{});
    out.L.assign(n3, S{});
    const SqMat<S>& F = out.F;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          S dg{};
          S br{};
          for (int l = 0; l < n; ++l) {
            dg += F(i, l) * up.g(j, k).d[l];
            br += F(i, l) * up.F(j, k).d[l] - F(j, l) * up.F(i, k).d[l];
          }
          out.dg[out.at(i, j, k)] = dg;
          out.bracket[out.at(i, j, k)] = br;
        }
      }
    }
    const SqMat<S>& G = out.G;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          S acc{};
          for (int m = 0; m < n; ++m) {
            for (int p = 0; p < n; ++p) acc += out.bracket[out.at(i, j, m)] * G(m, p) * F(k, p);
          }
          out.L[out.at(i, j, k)] = acc;
        }
      }
    }
    return cache.emplace(frame, std::move(out)).first->second;
  }
}

template <class S>
const ConnData<S>& PointContext::connection(const std::string& frame_name, Conn kind) {
  if constexpr (std::is_same_v<S, Jet11>) {
    throw JetBudgetExhausted("connection derivatives are not available at second-derivative level");
  } else {
    auto& cache = std::get<Level<S>>(levels_).conn;
    const auto key = std::make_pair(frame_name, static_cast<int>(kind));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const int n = dim();
    ConnData<S> out;
    static_cast<FrameData<S>&>(out) = frame<S>(frame_name);
    const std::size_t n3 = static_cast<std::size_t>(n * n * n);
    out.gamma_bar.assign(n3, S{});
    out.chi.assign(n3, S{});
    const auto& dg = out.dg;
    const auto& L = out.L;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          out.gamma_bar[out.at(i, j, k)] =
              0.5 * (dg[out.at(i, j, k)] - dg[out.at(k, i, j)] + dg[out.at(j, k, i)]) +
              0.5 * (L[out.at(i, j, k)] - L[out.at(j, k, i)] + L[out.at(k, i, j)]);
        }
      }
    }
    if (kind == Conn::Chart && !chart_->contorsion.empty()) {
      const auto& chi_jets = contorsion_jets();
      std::vector<S> chic(n3);
      for (std::size_t q = 0; q < n3; ++q) chic[q] = expr::lift<S>(chi_jets[q]);
      const SqMat<S>& F = out.F;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            S acc{};
            for (int a = 0; a < n; ++a) {
              for (int b = 0; b < n; ++b) {
                const S fab = F(i, a) * F(j, b);
                for (int c = 0; c < n; ++c) acc += fab * F(k, c) * chic[out.at(a, b, c)];
              }
            }
            out.chi[out.at(i, j, k)] = acc;
          }
        }
      }
    }
    out.gamma.resize(n3);
    for (std::size_t q = 0; q < n3; ++q) out.gamma[q] = out.gamma_bar[q] + out.chi[q];
    out.vec.assign(n3, S{});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          S acc{};
          for (int k = 0; k < n; ++k) acc += out.gamma[out.at(i, j, k)] * out.ginv(k, l);
          out.vec[out.at(i, j, l)] = acc;
        }
      }
    }
    return cache.emplace(key, std::move(out)).first->second;
  }
}

template const GramAt<double>& PointContext::gram<double>(const std::string&);
template const GramAt<Jet1>& PointContext::gram<Jet1>(const std::string&);
template const GramAt<Jet11>& PointContext::gram<Jet11>(const std::string&);
template const FrameData<double>& PointContext::frame<double>(const std::string&);
template const FrameData<Jet1>& PointContext::frame<Jet1>(const std::string&);
template const FrameData<Jet11>& PointContext::frame<Jet11>(const std::string&);
template const ConnData<double>& PointContext::connection<double>(const std::string&, Conn);
template const ConnData<Jet1>& PointContext::connection<Jet1>(const std::string&, Conn);
template const ConnData<Jet11>& PointContext::connection<Jet11>(const std::string&, Conn);

// ---------------------------------------------------------------------------

FrameAt eval_frame(const Chart& chart, const std::string& frame, std::span<const double> point) {
  PointContext ctx(chart, std::vector<double>(point.begin(), point.end()));
  return ctx.frame<double>(frame);
}

double dirderiv_scalar(const Chart& chart, const FrameAt& frame, std::span<const double> point,
                       std::span<const double> a, const Expr& phi) {
  const int n = chart.dim();
  if (static_cast<int>(a.size()) != n || frame.n != n) throw DimMismatch("direction has wrong dimension");
  const expr::Jet2 j = expr::eval_jet2(phi, point);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) acc += a[i] * frame.F(i, k) * j.grad[k];
  }
  return acc;
}

std::vector<double> lie_bracket(const Chart& chart, std::span<const Expr> a, std::span<const Expr> b,
                                std::span<const double> point) {
  const int n = chart.dim();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) throw DimMismatch("vector field has wrong dimension");
  std::vector<expr::Jet2> ja;
  std::vector<expr::Jet2> jb;
  for (int i = 0; i < n; ++i) {
    ja.push_back(expr::eval_jet2(a[i], point));
    jb.push_back(expr::eval_jet2(b[i], point));
  }
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) out[k] += ja[l].value * jb[k].grad[l] - jb[l].value * ja[k].grad[l];
  }
  return out;
}

FrameClass classify_frame(const FrameAt& frame) {
  const int n = frame.n;
  FrameClass out;
  double offdiag = 0.0;
  double diag_dev = 0.0;
  std::vector<int> eta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    eta[i] = frame.g(i, i) < 0 ? -1 : 1;
    diag_dev = std::max(diag_dev, std::abs(frame.g(i, i) - eta[i]));
    for (int j = 0; j < n; ++j) {
      if (i != j) offdiag = std::max(offdiag, std::abs(frame.g(i, j)));
    }
  }
  out.orthonormal = std::max(offdiag, diag_dev) < 1e-10;
  if (out.orthonormal) out.signature = eta;
  double lmax = 0.0;
  for (double x : frame.L) lmax = std::max(lmax, std::abs(x));
  out.holonomic = lmax < 1e-10;
  return out;
}

SqMat<double> gradient_basis(const Chart& chart, std::span<const double> point) {
  PointContext ctx(chart, std::vector<double>(point.begin(), point.end()));
  return ctx.gram<double>("coord").ginv;
}

}  // namespace gcalc
