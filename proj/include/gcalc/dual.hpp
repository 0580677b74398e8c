#pragma once

// First-order forward jets over the chart coordinates, nestable.
//
// Dual<double> carries a value and its n coordinate partials. Dual<Dual<double>>
// carries a value with exact first and second partials. Every geometric
// quantity that must be differentiated once more (frame Gram, connection
// coefficients, field components) is computed generically over a scalar type
// S in {double, Jet1, Jet11}, one level below the data it is built from.

#include <algorithm>
#include <array>
#include <cmath>

namespace gcalc {

inline constexpr int kMaxChartDim = 4;

template <class S>
struct Dual {
  S v{};
  std::array<S, kMaxChartDim> d{};

  constexpr Dual() = default;
  constexpr Dual(double x) : v(x) {}  // NOLINT(google-explicit-constructor)
  constexpr Dual(const S& value, const std::array<S, kMaxChartDim>& partials)
      : v(value), d(partials) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    for (int k = 0; k < kMaxChartDim; ++k) d[k] += o.d[k];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    for (int k = 0; k < kMaxChartDim; ++k) d[k] -= o.d[k];
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (int k = 0; k < kMaxChartDim; ++k) d[k] = v * o.d[k] + d[k] * o.v;
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    v /= o.v;
    for (int k = 0; k < kMaxChartDim; ++k) d[k] = (d[k] - v * o.d[k]) / o.v;
    return *this;
  }
};

using Jet1 = Dual<double>;
using Jet11 = Dual<Dual<double>>;

template <class S>
inline Dual<S> operator+(Dual<S> a, const Dual<S>& b) { return a += b; }
template <class S>
inline Dual<S> operator-(Dual<S> a, const Dual<S>& b) { return a -= b; }
template <class S>
inline Dual<S> operator*(Dual<S> a, const Dual<S>& b) { return a *= b; }
template <class S>
inline Dual<S> operator/(Dual<S> a, const Dual<S>& b) { return a /= b; }

template <class S>
inline Dual<S> operator-(Dual<S> a) {
  a.v = -a.v;
  for (auto& x : a.d) x = -x;
  return a;
}

template <class S>
inline Dual<S> operator*(double s, Dual<S> a) {
  a.v *= s;
  for (auto& x : a.d) x *= s;
  return a;
}
template <class S>
inline Dual<S> operator*(Dual<S> a, double s) { return s * a; }
template <class S>
inline Dual<S> operator+(Dual<S> a, double s) {
  a.v += s;
  return a;
}
template <class S>
inline Dual<S> operator+(double s, Dual<S> a) { return a + s; }
template <class S>
inline Dual<S> operator-(Dual<S> a, double s) {
  a.v -= s;
  return a;
}
template <class S>
inline Dual<S> operator-(double s, const Dual<S>& a) { return (-a) + s; }
template <class S>
inline Dual<S> operator/(Dual<S> a, double s) { return a * (1.0 / s); }
template <class S>
inline Dual<S> operator/(double s, const Dual<S>& a) { return Dual<S>(s) / a; }

inline double value_of(double x) { return x; }
template <class S>
inline double value_of(const Dual<S>& x) { return value_of(x.v); }

inline double sqrt_jet(double x) { return std::sqrt(x); }
template <class S>
inline Dual<S> sqrt_jet(const Dual<S>& x) {
  Dual<S> r;
  r.v = sqrt_jet(x.v);
  S denom = 2.0 * r.v;
  for (int k = 0; k < kMaxChartDim; ++k) r.d[k] = x.d[k] / denom;
  return r;
}

inline double abs_jet(double x) { return std::abs(x); }
template <class S>
inline Dual<S> abs_jet(const Dual<S>& x) { return value_of(x) < 0.0 ? -x : x; }

// Largest magnitude over the value and every partial, recursively.
inline double max_abs(double x) { return std::abs(x); }
template <class S>
inline double max_abs(const Dual<S>& x) {
  double m = max_abs(x.v);
  for (const auto& p : x.d) m = std::max(m, max_abs(p));
  return m;
}

// Drops the outermost derivative level: Dual<S> -> S.
template <class S>
inline const S& lower(const Dual<S>& x) { return x.v; }

}  // namespace gcalc
