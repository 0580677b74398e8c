#pragma once

// Closed-form scalar-field expressions over chart coordinates.
//
// Grammar (standard infix):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | coord | func '(' sum ')' | '(' sum ')'
// Functions: sin cos tan exp log sqrt sinh cosh tanh abs.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcalc/dual.hpp"

namespace gcalc::expr {

enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Tanh, Abs };
enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class Kind { Number, Coord, Neg, Binary, Call };

struct Node;

// Immutable, cheaply copyable expression handle. Default-constructed = 0.
class Expr {
 public:
  Expr();

  static Expr number(double value);
  static Expr coord(std::size_t index);
  static Expr neg(Expr arg);
  static Expr call(Func f, Expr arg);
  static Expr binary(BinOp op, Expr lhs, Expr rhs);

  Kind kind() const;
  double number_value() const;
  std::size_t coord_index() const;
  Func func() const;
  BinOp op() const;
  const Expr& lhs() const;  // Neg / Call operand, or Binary left side
  const Expr& rhs() const;

  // True when the tree is the literal 0 (no folding beyond that).
  bool is_zero_literal() const;
  // One past the largest coordinate index referenced, 0 when constant.
  std::size_t coord_span() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  friend struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator-(const Expr& e);
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr pow(const Expr& a, const Expr& b);

const char* func_name(Func f);

Expr parse(std::string_view text, std::span<const std::string> coords);

// Canonical, fully parenthesised form; parse(to_string(e)) == e.
std::string to_string(const Expr& e, std::span<const std::string> coords);

// Value-only evaluation. Instantiated for double and long double; the latter
// backs the finite-difference cross-checks.
template <class T>
T evaluate(const Expr& e, std::span<const T> point);

// Value with exact first and second coordinate derivatives.
struct Jet2 {
  double value = 0.0;
  std::vector<double> grad;  // n
  std::vector<double> hess;  // n*n, row-major, symmetric by construction

  Jet2() = default;
  explicit Jet2(std::size_t n, double v = 0.0) : value(v), grad(n, 0.0), hess(n * n, 0.0) {}
  std::size_t dim() const { return grad.size(); }
  double h(std::size_t k, std::size_t l) const { return hess[k * grad.size() + l]; }
};

Jet2 eval_jet2(const Expr& e, std::span<const double> point);

// Converts a second-order jet into the nested forward-jet levels:
// double (value), Jet1 (value, grad), Jet11 (value, grad, hess).
template <class S>
S lift(const Jet2& j);

template <>
inline double lift<double>(const Jet2& j) { return j.value; }

template <>
inline Jet1 lift<Jet1>(const Jet2& j) {
  Jet1 r(j.value);
  for (std::size_t k = 0; k < j.dim(); ++k) r.d[k] = j.grad[k];
  return r;
}

template <>
inline Jet11 lift<Jet11>(const Jet2& j) {
  Jet11 r;
  r.v = lift<Jet1>(j);
  const std::size_t n = j.dim();
  for (std::size_t k = 0; k < n; ++k) {
    r.d[k].v = j.grad[k];
    for (std::size_t l = 0; l < n; ++l) r.d[k].d[l] = j.h(k, l);
  }
  return r;
}

}  // namespace gcalc::expr
