#pragma once

// Multivector fields sampled at a point at one of three derivative levels:
// double (values), Jet1 (values + first partials), Jet11 (+ second partials).
//
// Every field carries a jet budget: the deepest level it can be sampled at.
// Primitive fields have budget 2; a derived field (one derivative applied)
// has its input's budget minus one, so d(dA) and grad(grad A) are available
// as values while a third derivative is rejected.

#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "gcalc/ga.hpp"
#include "gcalc/manifold.hpp"

namespace gcalc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

template <class S>
inline constexpr int level_of = std::is_same_v<S, double> ? 0 : std::is_same_v<S, Jet1> ? 1 : 2;

class Field {
 public:
  Field(int n, std::string frame, int budget) : n_(n), frame_(std::move(frame)), budget_(budget) {}
  virtual ~Field() = default;

  int dim() const { return n_; }
  const std::string& frame() const { return frame_; }
  int budget() const { return budget_; }

  template <class S>
  MV<S> sample(PointContext& ctx) const {
    if (budget_ < level_of<S>) {
      throw JetBudgetExhausted("field sampled beyond its derivative budget");
    }
    if (ctx.dim() != n_) throw DimMismatch("field dimension differs from chart dimension");
    if constexpr (std::is_same_v<S, double>) {
      return eval0(ctx);
    } else if constexpr (std::is_same_v<S, Jet1>) {
      return eval1(ctx);
    } else {
      return eval2(ctx);
    }
  }
  Multivector at(PointContext& ctx) const { return sample<double>(ctx); }

 protected:
  virtual MV<double> eval0(PointContext& ctx) const = 0;
  virtual MV<Jet1> eval1(PointContext& ctx) const = 0;
  virtual MV<Jet11> eval2(PointContext& ctx) const = 0;

 private:
  int n_;
  std::string frame_;
  int budget_;
};

// Routes the three virtual levels to one templated eval<S>.
template <class Derived>
class FieldImpl : public Field {
 public:
  using Field::Field;

 protected:
  MV<double> eval0(PointContext& ctx) const override { return self().template eval<double>(ctx); }
  MV<Jet1> eval1(PointContext& ctx) const override { return self().template eval<Jet1>(ctx); }
  MV<Jet11> eval2(PointContext& ctx) const override { return self().template eval<Jet11>(ctx); }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

// Primitive fields.
FieldPtr expr_field(int n, const std::string& frame, std::map<Mask, Expr> components);
FieldPtr field_from_def(const Chart& chart, const FieldDef& def);
FieldPtr constant_field(const std::string& frame, const Multivector& value);
FieldPtr basis_field(int n, const std::string& frame, Mask blade);
FieldPtr reciprocal_field(int n, const std::string& frame, int i);  // e^i
FieldPtr pseudoscalar_field(int n, const std::string& frame);       // unit I, chart orientation

// Same geometric field, coefficients re-expressed in another frame.
FieldPtr reexpress(const FieldPtr& f, const std::string& frame);
// Same coefficients under another frame label (used for the forms bridge).
FieldPtr retag(const FieldPtr& f, const std::string& frame);

// Pointwise algebra (operands must share a frame).
FieldPtr add(const FieldPtr& a, const FieldPtr& b);
FieldPtr sub(const FieldPtr& a, const FieldPtr& b);
FieldPtr gp(const FieldPtr& a, const FieldPtr& b);
FieldPtr dot(const FieldPtr& a, const FieldPtr& b);
FieldPtr wedge(const FieldPtr& a, const FieldPtr& b);
FieldPtr grade(const FieldPtr& a, int k);
FieldPtr scale(const FieldPtr& a, double s);
FieldPtr dual(const FieldPtr& a);
FieldPtr reverse(const FieldPtr& a);

// Derived fields (one derivative each).
FieldPtr mdd_field(const FieldPtr& a, std::vector<double> direction, Conn kind = Conn::Chart);
FieldPtr mdd_basis_field(const FieldPtr& a, int i, Conn kind = Conn::Chart);
FieldPtr gradient_field(const FieldPtr& a, Conn kind = Conn::Chart);
FieldPtr divergence_field(const FieldPtr& a, Conn kind = Conn::Chart);
FieldPtr curl_field(const FieldPtr& a, Conn kind = Conn::Chart);
FieldPtr ext_d_field(const FieldPtr& a);  // Levi-Civita curl
// Coordinate exterior derivative of component arrays (metric-blind).
FieldPtr coordinate_d_field(const FieldPtr& a);

}  // namespace gcalc
