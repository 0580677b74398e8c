#pragma once

// Tensors on the geometric algebra: multilinear maps of multivector slots
// with stated grades, stored as scalar component expressions
// T(e_J1, ..., e_JN) = T_{J1..JN J0} e^{J0} relative to one frame.

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gcalc/field.hpp"
#include "gcalc/manifold.hpp"

namespace gcalc {

struct TensorSignature {
  std::vector<int> slots;  // k1..kN
  int out = 0;             // k0
  bool operator==(const TensorSignature&) const = default;
};

struct TensorKey {
  std::vector<Mask> slots;
  Mask out = 0;
  auto operator<=>(const TensorKey&) const = default;
};

class TensorField {
 public:
  TensorField(int n, std::string frame, TensorSignature sig);

  int dim() const { return n_; }
  const std::string& frame() const { return frame_; }
  const TensorSignature& signature() const { return sig_; }
  const std::map<TensorKey, Expr>& components() const { return comps_; }

  void set(const TensorKey& key, const Expr& value);
  Expr get(const TensorKey& key) const;

  // Multilinear evaluation; arguments are frame coefficients of pure-grade
  // multivectors matching the slot grades.
  template <class S>
  MV<S> eval(PointContext& ctx, const std::vector<MV<S>>& args) const;

 private:
  int n_;
  std::string frame_;
  TensorSignature sig_;
  std::map<TensorKey, Expr> comps_;
};

Multivector tensor_eval(const TensorField& t, const std::vector<Multivector>& args, PointContext& ctx);

TensorField tensor_add(const TensorField& a, const TensorField& b);
TensorField tensor_scale(const TensorField& a, double s);
TensorField tensor_product(const TensorField& a, const TensorField& b);
TensorField zero_tensor(int n, const std::string& frame, TensorSignature sig);

// g(a, b) = a . b in the given frame.
TensorField metric_tensor(const Chart& chart, const std::string& frame);
// hat(B)(a1..ak) = B~ . (a1 ^ ... ^ ak); signature (1,...,1:0).
TensorField tensor_conjugate(const Chart& chart, const FieldDef& b);
// B(A) = B . <A>_k; signature (k:0).
TensorField tensor_conjugate_breve(const Chart& chart, const FieldDef& b);
// Q(a, b) = chi_ijk a^i b^j e^k in the given frame; signature (1,1:1).
TensorField contorsion_tensor(const Chart& chart, const std::string& frame);

// Field-level view of a tensor: arguments are fields, the result a field.
struct TensorOp {
  std::vector<int> slots;
  std::string frame;
  std::function<FieldPtr(const std::vector<FieldPtr>&)> apply;
};
TensorOp as_op(const TensorField& t);
// sum_i T(.., e_i (slot p), .., e^i (slot q), ..); remaining slots keep their order.
TensorOp contract_op(const TensorOp& t, int p, int q, int n);
Multivector contract(const TensorField& t, int p, int q, const std::vector<Multivector>& rest, PointContext& ctx);

// (D T)(a, A, ..., B) = D_a(T(A..B)) - sum_s T(.., D_a A_s, ..).
Multivector tensor_derivative_chain(PointContext& ctx, const TensorOp& t, std::span<const double> a,
                                    const std::vector<FieldPtr>& args, Conn kind = Conn::Chart);

// D_i T_{j1..jr} from components (all slots grade 1, scalar output), index
// (i, j1, ..., jr) row-major. With upper = true the result is D_i T^{j1..jr}.
std::vector<double> tensor_derivative_components(PointContext& ctx, const TensorField& t, Conn kind = Conn::Chart,
                                                 bool upper = false);

// Max deviation between D_a(hat B) and hat(D_a B) on the given vector arguments.
double conjugate_derivative_check(PointContext& ctx, const FieldDef& b, std::span<const double> a,
                                  const std::vector<Multivector>& vectors, Conn kind = Conn::Chart);

// "1;2 -> 3" style keys mapped to expression text.
std::map<std::string, std::string> serialize(const TensorField& t, std::span<const std::string> coords);

}  // namespace gcalc
