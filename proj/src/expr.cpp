#include "gcalc/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "gcalc/error.hpp"

namespace gcalc::expr {

struct Node {
  Kind kind = Kind::Number;
  double value = 0.0;
  std::size_t coord = 0;
  Func func = Func::Sin;
  BinOp op = BinOp::Add;
  // Null for leaves; set for Neg, Call and Binary.
  Expr lhs{std::shared_ptr<const Node>{}};
  Expr rhs{std::shared_ptr<const Node>{}};
  std::size_t span = 0;
};

namespace {

const std::shared_ptr<const Node>& zero_node() {
  static const auto node = std::make_shared<const Node>();
  return node;
}

constexpr std::array<std::pair<const char*, Func>, 10> kFunctions{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sqrt", Func::Sqrt},
    {"sinh", Func::Sinh},
    {"cosh", Func::Cosh},
    {"tanh", Func::Tanh},
    {"abs", Func::Abs},
}};

}  // namespace

Expr::Expr() : node_(zero_node()) {}

Expr Expr::number(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::coord(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Coord;
  n->coord = index;
  n->span = index + 1;
  return Expr(std::move(n));
}

Expr Expr::neg(Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->span = arg.coord_span();
  n->lhs = std::move(arg);
  return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->func = f;
  n->span = arg.coord_span();
  n->lhs = std::move(arg);
  return Expr(std::move(n));
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binary;
  n->op = op;
  n->span = std::max(lhs.coord_span(), rhs.coord_span());
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Expr(std::move(n));
}

Kind Expr::kind() const { return node_->kind; }
double Expr::number_value() const { return node_->value; }
std::size_t Expr::coord_index() const { return node_->coord; }
Func Expr::func() const { return node_->func; }
BinOp Expr::op() const { return node_->op; }
const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }
std::size_t Expr::coord_span() const { return node_->span; }

bool Expr::is_zero_literal() const { return node_->kind == Kind::Number && node_->value == 0.0; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Number:
      return a.number_value() == b.number_value();
    case Kind::Coord:
      return a.coord_index() == b.coord_index();
    case Kind::Neg:
      return a.lhs() == b.lhs();
    case Kind::Call:
      return a.func() == b.func() && a.lhs() == b.lhs();
    case Kind::Binary:
      return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

Expr operator-(const Expr& e) { return Expr::neg(e); }
Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(BinOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(BinOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(BinOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(BinOp::Div, a, b); }
Expr pow(const Expr& a, const Expr& b) { return Expr::binary(BinOp::Pow, a, b); }

const char* func_name(Func f) {
  for (const auto& [name, func] : kFunctions) {
    if (func == f) return name;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> coords) : text_(text), coords_(coords) {}

  Expr run() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("empty expression", pos_);
    Expr e = sum();
    skip_space();
    if (pos_ < text_.size()) {
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void unexpected() {
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (accept('+')) {
        e = e + product();
      } else if (accept('-')) {
        e = e - product();
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        e = e / unary();
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) return pow(base, unary());
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) unexpected();
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      Expr e = sum();
      if (!accept(')')) unexpected();
      return e;
    }
    unexpected();
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ - start == 1 && text_[start] == '.') throw SyntaxError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        pos_ = p;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    return Expr::number(std::strtod(literal.c_str(), nullptr));
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      for (const auto& [fname, func] : kFunctions) {
        if (name == fname) {
          ++pos_;
          Expr arg = sum();
          if (!accept(')')) unexpected();
          return Expr::call(func, std::move(arg));
        }
      }
      throw UnknownIdentifier("unknown function '" + std::string(name) + "' at position " +
                              std::to_string(start));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == name) return Expr::coord(i);
    }
    throw UnknownIdentifier("unknown identifier '" + std::string(name) + "' at position " +
                            std::to_string(start));
  }

  std::string_view text_;
  std::span<const std::string> coords_;
  std::size_t pos_ = 0;
};

const char* op_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add:
      return "+";
    case BinOp::Sub:
      return "-";
    case BinOp::Mul:
      return "*";
    case BinOp::Div:
      return "/";
    case BinOp::Pow:
      return "^";
  }
  return "?";
}

void print(const Expr& e, std::span<const std::string> coords, std::string& out) {
  switch (e.kind()) {
    case Kind::Number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.number_value());
      out += buf;
      return;
    }
    case Kind::Coord:
      if (e.coord_index() < coords.size()) {
        out += coords[e.coord_index()];
      } else {
        out += "x" + std::to_string(e.coord_index() + 1);
      }
      return;
    case Kind::Neg:
      out += "(-";
      print(e.lhs(), coords, out);
      out += ")";
      return;
    case Kind::Call:
      out += func_name(e.func());
      out += "(";
      print(e.lhs(), coords, out);
      out += ")";
      return;
    case Kind::Binary:
      out += "(";
      print(e.lhs(), coords, out);
      out += op_symbol(e.op());
      print(e.rhs(), coords, out);
      out += ")";
      return;
  }
}

}  // namespace

Expr parse(std::string_view text, std::span<const std::string> coords) {
  return Parser(text, coords).run();
}

std::string to_string(const Expr& e, std::span<const std::string> coords) {
  std::string out;
  print(e, coords, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

template <class T>
T ipow(T base, long k) {
  if (k < 0) return T(1) / ipow(base, -k);
  T result = 1;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

// Constant subtree with an integral value: evaluated by repeated
// multiplication so that negative bases are allowed.
bool integral_exponent(const Expr& exponent, long& k) {
  if (exponent.coord_span() != 0) return false;
  const double w = evaluate<double>(exponent, std::span<const double>{});
  if (w != std::floor(w) || std::abs(w) > 1e9) return false;
  k = static_cast<long>(w);
  return true;
}

template <class T>
T check_finite(T x) {
  if (!std::isfinite(static_cast<double>(x))) throw DomainError("non-finite intermediate value");
  return x;
}

}  // namespace

template <class T>
T evaluate(const Expr& e, std::span<const T> point) {
  using std::abs, std::cos, std::cosh, std::exp, std::log, std::sin, std::sinh, std::sqrt,
      std::tan, std::tanh;
  switch (e.kind()) {
    case Kind::Number:
      return static_cast<T>(e.number_value());
    case Kind::Coord:
      if (e.coord_index() >= point.size()) throw DimMismatch("coordinate index out of range");
      return point[e.coord_index()];
    case Kind::Neg:
      return -evaluate(e.lhs(), point);
    case Kind::Call: {
      const T u = evaluate(e.lhs(), point);
      switch (e.func()) {
        case Func::Sin:
          return sin(u);
        case Func::Cos:
          return cos(u);
        case Func::Tan:
          return check_finite(tan(u));
        case Func::Exp:
          return check_finite(exp(u));
        case Func::Log:
          if (!(u > 0)) throw DomainError("log of non-positive value");
          return log(u);
        case Func::Sqrt:
          if (u < 0) throw DomainError("sqrt of negative value");
          return sqrt(u);
        case Func::Sinh:
          return check_finite(sinh(u));
        case Func::Cosh:
          return check_finite(cosh(u));
        case Func::Tanh:
          return tanh(u);
        case Func::Abs:
          return abs(u);
      }
      break;
    }
    case Kind::Binary: {
      const T a = evaluate(e.lhs(), point);
      if (e.op() == BinOp::Pow) {
        long k = 0;
        if (integral_exponent(e.rhs(), k)) {
          if (a == 0 && k < 0) throw DomainError("zero base with negative exponent");
          return check_finite(ipow(a, k));
        }
        if (!(a > 0)) throw DomainError("non-integer power of non-positive base");
        return check_finite(std::pow(a, evaluate(e.rhs(), point)));
      }
      const T b = evaluate(e.rhs(), point);
      switch (e.op()) {
        case BinOp::Add:
          return a + b;
        case BinOp::Sub:
          return a - b;
        case BinOp::Mul:
          return a * b;
        case BinOp::Div:
          if (b == 0) throw DomainError("division by zero");
          return check_finite(a / b);
        case BinOp::Pow:
          break;
      }
      break;
    }
  }
  throw DomainError("malformed expression");
}

template double evaluate<double>(const Expr&, std::span<const double>);
template long double evaluate<long double>(const Expr&, std::span<const long double>);

namespace {

Jet2 add(Jet2 a, const Jet2& b, double sign) {
  a.value += sign * b.value;
  for (std::size_t i = 0; i < a.grad.size(); ++i) a.grad[i] += sign * b.grad[i];
  for (std::size_t i = 0; i < a.hess.size(); ++i) a.hess[i] += sign * b.hess[i];
  return a;
}

Jet2 mul(const Jet2& a, const Jet2& b) {
  const std::size_t n = a.dim();
  Jet2 r(n, a.value * b.value);
  for (std::size_t k = 0; k < n; ++k) r.grad[k] = a.value * b.grad[k] + b.value * a.grad[k];
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      r.hess[k * n + l] = a.value * b.h(k, l) + b.value * a.h(k, l) + a.grad[k] * b.grad[l] +
                          b.grad[k] * a.grad[l];
    }
  }
  return r;
}

// f(u) given f(u), f'(u), f''(u).
Jet2 chain(const Jet2& u, double f0, double f1, double f2) {
  const std::size_t n = u.dim();
  Jet2 r(n, f0);
  for (std::size_t k = 0; k < n; ++k) r.grad[k] = f1 * u.grad[k];
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) r.hess[k * n + l] = f1 * u.h(k, l) + f2 * u.grad[k] * u.grad[l];
  }
  return r;
}

Jet2 finite(Jet2 j) {
  bool ok = std::isfinite(j.value);
  for (double g : j.grad) ok = ok && std::isfinite(g);
  for (double h : j.hess) ok = ok && std::isfinite(h);
  if (!ok) throw DomainError("non-finite derivative");
  return j;
}

Jet2 jet_of(const Expr& e, std::span<const double> p) {
  const std::size_t n = p.size();
  switch (e.kind()) {
    case Kind::Number:
      return Jet2(n, e.number_value());
    case Kind::Coord: {
      if (e.coord_index() >= n) throw DimMismatch("coordinate index out of range");
      Jet2 r(n, p[e.coord_index()]);
      r.grad[e.coord_index()] = 1.0;
      return r;
    }
    case Kind::Neg:
      return add(Jet2(n), jet_of(e.lhs(), p), -1.0);
    case Kind::Call: {
      const Jet2 u = jet_of(e.lhs(), p);
      const double x = u.value;
      switch (e.func()) {
        case Func::Sin:
          return chain(u, std::sin(x), std::cos(x), -std::sin(x));
        case Func::Cos:
          return chain(u, std::cos(x), -std::sin(x), -std::cos(x));
        case Func::Tan: {
          const double t = std::tan(x);
          return finite(chain(u, t, 1 + t * t, 2 * t * (1 + t * t)));
        }
        case Func::Exp: {
          const double ex = std::exp(x);
          return finite(chain(u, ex, ex, ex));
        }
        case Func::Log:
          if (!(x > 0)) throw DomainError("log of non-positive value");
          return chain(u, std::log(x), 1 / x, -1 / (x * x));
        case Func::Sqrt: {
          if (!(x > 0)) throw DomainError("sqrt of non-positive value has no derivative");
          const double s = std::sqrt(x);
          return chain(u, s, 0.5 / s, -0.25 / (s * x));
        }
        case Func::Sinh:
          return finite(chain(u, std::sinh(x), std::cosh(x), std::sinh(x)));
        case Func::Cosh:
          return finite(chain(u, std::cosh(x), std::sinh(x), std::cosh(x)));
        case Func::Tanh: {
          const double t = std::tanh(x);
          return chain(u, t, 1 - t * t, -2 * t * (1 - t * t));
        }
        case Func::Abs:
          if (x == 0) throw DomainError("abs is not differentiable at 0");
          return chain(u, std::abs(x), x > 0 ? 1.0 : -1.0, 0.0);
      }
      break;
    }
    case Kind::Binary: {
      const Jet2 a = jet_of(e.lhs(), p);
      if (e.op() == BinOp::Pow) {
        long k = 0;
        if (integral_exponent(e.rhs(), k)) {
          const double x = a.value;
          if (x == 0 && k < 0) throw DomainError("zero base with negative exponent");
          if (k == 0) return Jet2(n, 1.0);
          const double f1 = static_cast<double>(k) * ipow(x, k - 1);
          const double f2 = k == 1 ? 0.0 : static_cast<double>(k) * static_cast<double>(k - 1) * ipow(x, k - 2);
          return finite(chain(a, ipow(x, k), f1, f2));
        }
        if (!(a.value > 0)) throw DomainError("non-integer power of non-positive base");
        const Jet2 w = jet_of(e.rhs(), p);
        const Jet2 lg = chain(a, std::log(a.value), 1 / a.value, -1 / (a.value * a.value));
        const Jet2 m = mul(w, lg);
        const double ex = std::exp(m.value);
        return finite(chain(m, ex, ex, ex));
      }
      const Jet2 b = jet_of(e.rhs(), p);
      switch (e.op()) {
        case BinOp::Add:
          return add(a, b, 1.0);
        case BinOp::Sub:
          return add(a, b, -1.0);
        case BinOp::Mul:
          return mul(a, b);
        case BinOp::Div: {
          const double y = b.value;
          if (y == 0) throw DomainError("division by zero");
          return finite(mul(a, chain(b, 1 / y, -1 / (y * y), 2 / (y * y * y))));
        }
        case BinOp::Pow:
          break;
      }
      break;
    }
  }
  throw DomainError("malformed expression");
}

}  // namespace

Jet2 eval_jet2(const Expr& e, std::span<const double> point) {
  if (e.coord_span() > point.size()) throw DimMismatch("expression references a coordinate beyond the point");
  return jet_of(e, point);
}

}  // namespace gcalc::expr
