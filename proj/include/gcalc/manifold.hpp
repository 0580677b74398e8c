#pragma once

// Charts, frames evaluated at points, and the per-point evaluation context.
//
// A frame is a matrix F of coordinate components: row i holds e_i = F_i^k e(x_k).
// Everything geometric at a point is produced from jets of the metric and
// frame expressions. Quantities at scalar level S that involve one derivative
// of the data (Lie coefficients, frame-metric derivatives, connection) are
// built from the data lifted to Dual<S>.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gcalc/expr.hpp"
#include "gcalc/ga.hpp"
#include "gcalc/linalg.hpp"

namespace gcalc {

using expr::Expr;

struct ContorsionEntry {
  int i = 0;  // 0-based
  int j = 0;
  int k = 0;
  Expr value;
};

struct FieldDef {
  std::string frame;
  std::map<Mask, Expr> components;
};

struct Chart {
  std::string name;
  std::vector<std::string> coords;
  SqMat<Expr> metric;                         // coordinate-frame g_ij
  std::map<std::string, SqMat<Expr>> frames;  // always holds "coord" and "grad"
  std::vector<ContorsionEntry> contorsion;    // chi_ijk in the coordinate frame
  int orientation = 1;
  std::vector<std::pair<double, double>> domain;  // sampling box per coordinate
  std::map<std::string, FieldDef> fields;

  int dim() const { return static_cast<int>(coords.size()); }
  const SqMat<Expr>& frame(const std::string& name) const;
  bool has_frame(const std::string& name) const { return frames.count(name) != 0; }

  // Adds "coord" (identity) and "grad" (inverse metric rows dx^i) when absent,
  // fills the default domain, and validates shapes and metric symmetry.
  void finalize();

  Chart with_contorsion(std::vector<ContorsionEntry> chi) const;
  Chart with_metric(SqMat<Expr> g) const;
};

Chart make_chart(std::string name, std::vector<std::string> coords, const std::vector<std::vector<std::string>>& metric);
SqMat<Expr> parse_matrix(const std::vector<std::vector<std::string>>& rows, std::span<const std::string> coords);

// Frame quantities at scalar level S.
template <class S>
struct GramAt {
  int n = 0;
  SqMat<S> F;     // frame components
  SqMat<S> G;     // coordinate metric
  SqMat<S> g;     // frame Gram F G F^T
  SqMat<S> ginv;
  S det_g{};
  S det_F{};
};

template <class S>
struct FrameData : GramAt<S> {
  std::vector<S> dg;       // d_{e_i} g_jk
  std::vector<S> bracket;  // [e_i, e_j]^k, coordinate components
  std::vector<S> L;        // L_ijk = [e_i, e_j] . e_k
  std::size_t at(int i, int j, int k) const { return static_cast<std::size_t>((i * this->n + j) * this->n + k); }
};

template <class S>
struct ConnData : FrameData<S> {
  std::vector<S> gamma_bar;  // Levi-Civita part
  std::vector<S> chi;        // contorsion in this frame
  std::vector<S> gamma;      // gamma_bar + chi
  std::vector<S> vec;        // D_{e_i} e_j = vec[i,j,l] e_l
};

using FrameAt = FrameData<double>;
using ConnectionAt = ConnData<double>;

enum class Conn { Chart, LeviCivita };

// Lazily evaluated, cached geometry of one chart at one point.
class PointContext {
 public:
  PointContext(const Chart& chart, std::vector<double> point);
  PointContext(const PointContext&) = delete;
  PointContext& operator=(const PointContext&) = delete;

  const Chart& chart() const { return *chart_; }
  int dim() const { return chart_->dim(); }
  const std::vector<double>& point() const { return point_; }

  expr::Jet2 jet(const Expr& e) const;
  template <class S>
  S lift(const Expr& e) const {
    return expr::lift<S>(jet(e));
  }

  template <class S>
  const GramAt<S>& gram(const std::string& frame);
  template <class S>
  const FrameData<S>& frame(const std::string& frame);
  template <class S>
  const ConnData<S>& connection(const std::string& frame, Conn kind);

  const std::vector<expr::Jet2>& frame_jets(const std::string& frame);
  const std::vector<expr::Jet2>& metric_jets() const { return metric_; }
  const std::vector<expr::Jet2>& contorsion_jets();

 private:
  template <class S>
  struct Level {
    std::map<std::string, GramAt<S>> gram;
    std::map<std::string, FrameData<S>> frame;
    std::map<std::pair<std::string, int>, ConnData<S>> conn;
  };

  const Chart* chart_;
  std::vector<double> point_;
  std::vector<expr::Jet2> metric_;
  std::map<std::string, std::vector<expr::Jet2>> frames_;
  std::vector<expr::Jet2> chi_;
  bool chi_ready_ = false;
  std::tuple<Level<double>, Level<Jet1>, Level<Jet11>> levels_;
};

// Double-precision public API.
FrameAt eval_frame(const Chart& chart, const std::string& frame, std::span<const double> point);

// a^i F_i^k d(phi)/dx^k.
double dirderiv_scalar(const Chart& chart, const FrameAt& frame, std::span<const double> point,
                       std::span<const double> a, const Expr& phi);

// [a, b] for vector fields given by coordinate-frame component expressions.
std::vector<double> lie_bracket(const Chart& chart, std::span<const Expr> a, std::span<const Expr> b,
                                std::span<const double> point);

struct FrameClass {
  bool orthonormal = false;
  bool holonomic = false;
  std::vector<int> signature;  // eta(i) when orthonormal
};
FrameClass classify_frame(const FrameAt& frame);

// Rows dx^i = g^{ij} e(x_j).
SqMat<double> gradient_basis(const Chart& chart, std::span<const double> point);

}  // namespace gcalc
