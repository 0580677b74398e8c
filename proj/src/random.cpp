#include "gcalc/random.hpp"

#include <cstdio>

namespace gcalc {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  std::string s(buf);
  return v < 0 ? "(" + s + ")" : s;
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return Rng(seed * 0x9e3779b97f4a7c15ull ^ h);
}

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
bool Rng::coin(double p) { return uniform(0.0, 1.0) < p; }

std::vector<double> random_point(Rng& rng, const Chart& chart) {
  std::vector<double> p;
  for (const auto& [lo, hi] : chart.domain) p.push_back(rng.uniform(lo, hi));
  return p;
}

std::string random_smooth_text(Rng& rng, const std::vector<std::string>& coords) {
  const int n = static_cast<int>(coords.size());
  auto factor = [&]() -> std::string {
    const std::string& x = coords[static_cast<std::size_t>(rng.integer(0, n - 1))];
    switch (rng.integer(0, 4)) {
      case 0: return x;
      case 1: return "sin(" + num(rng.uniform(0.3, 1.5)) + "*" + x + "+" + num(rng.uniform(-1, 1)) + ")";
      case 2: return "cos(" + num(rng.uniform(0.3, 1.5)) + "*" + x + "+" + num(rng.uniform(-1, 1)) + ")";
      case 3: return "exp(" + num(rng.uniform(-0.4, 0.4)) + "*" + x + ")";
      default: return x + "^2";
    }
  };
  std::string out = num(rng.uniform(-1, 1));
  const int terms = rng.integer(1, 3);
  for (int t = 0; t < terms; ++t) {
    out += "+" + num(rng.uniform(-1, 1)) + "*" + factor();
    if (rng.coin()) out += "*" + factor();
  }
  return out;
}

Expr random_smooth(Rng& rng, const Chart& chart) { return expr::parse(random_smooth_text(rng, chart.coords), chart.coords); }

std::string random_whitelist_text(Rng& rng, const std::vector<std::string>& coords, int depth) {
  const int n = static_cast<int>(coords.size());
  if (depth <= 0 || rng.coin(0.2)) {
    const std::string& x = coords[static_cast<std::size_t>(rng.integer(0, n - 1))];
    switch (rng.integer(0, 2)) {
      case 0: return x;
      case 1: return num(rng.uniform(-2, 2)) + "*" + x;
      default: return "(" + x + "+" + num(rng.uniform(-1, 1)) + ")";
    }
  }
  auto sub = [&] { return random_whitelist_text(rng, coords, depth - 1); };
  switch (rng.integer(0, 17)) {
    case 0: return "(" + sub() + "+" + sub() + ")";
    case 1: return "(" + sub() + "-" + sub() + ")";
    case 2: return "(" + sub() + "*" + sub() + ")";
    case 3: return "(" + sub() + "/(1.5+sin(" + sub() + ")))";
    case 4: return "sin(" + sub() + ")";
    case 5: return "cos(" + sub() + ")";
    case 6: return "tan(0.6*sin(" + sub() + "))";
    case 7: return "exp(sin(" + sub() + "))";
    case 8: return "log(2+cos(" + sub() + "))";
    case 9: return "log(1+(" + sub() + ")^2)";
    case 10: return "sqrt(1.5+sin(" + sub() + "))";
    case 11: return "sinh(tanh(" + sub() + "))";
    case 12: return "cosh(sin(" + sub() + "))";
    case 13: return "tanh(" + sub() + ")";
    case 14: return "abs(2+sin(" + sub() + "))";
    case 15: return "(1.5+cos(" + sub() + "))^" + num(rng.uniform(-1.5, 1.5));
    case 16: return "(" + sub() + ")^" + std::to_string(rng.integer(2, 3));
    default: return "(2+sin(" + sub() + "))^(cos(" + sub() + "))";
  }
}

FieldDef random_field_def(Rng& rng, const Chart& chart, const std::string& frame, int k) {
  FieldDef def{frame, {}};
  const Mask full = (Mask{1} << chart.dim()) - 1;
  for (Mask m = 0; m <= full; ++m) {
    if (k >= 0 && grade_of(m) != k) continue;
    def.components[m] = random_smooth(rng, chart);
  }
  return def;
}

Multivector random_multivector(Rng& rng, int n, int k) {
  Multivector a(n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (k >= 0 && grade_of(m) != k) continue;
    a.c[m] = rng.uniform(-1, 1);
  }
  return a;
}

std::vector<double> random_vector(Rng& rng, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = rng.uniform(-1, 1);
  return v;
}

SqMat<double> random_matrix(Rng& rng, int n) {
  SqMat<double> m = SqMat<double>::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) += rng.uniform(-0.4, 0.4);
  return m;
}

SqMat<double> random_gram(Rng& rng, int n, bool indefinite) {
  const SqMat<double> m = random_matrix(rng, n);
  std::vector<double> s(static_cast<std::size_t>(n));
  for (auto& x : s) x = rng.uniform(0.5, 2.0);
  if (indefinite && n > 1) {
    const int negatives = rng.integer(1, n - 1);
    for (int i = 0; i < negatives; ++i) s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
  }
  SqMat<double> g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g(i, j) += m(i, k) * s[static_cast<std::size_t>(k)] * m(j, k);
  return g;
}

std::vector<ContorsionEntry> random_contorsion(Rng& rng, const Chart& chart, double scale) {
  std::vector<ContorsionEntry> out;
  const int n = chart.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const std::string& x = chart.coords[static_cast<std::size_t>(rng.integer(0, n - 1))];
        const std::string text = num(scale * rng.uniform(-1, 1)) + "*(1+0.5*sin(" + num(rng.uniform(0.5, 1.5)) + "*" +
                                 x + "+" + num(rng.uniform(-1, 1)) + "))";
        const Expr e = expr::parse(text, chart.coords);
        out.push_back({i, j, k, e});
        out.push_back({i, k, j, -e});
      }
  return out;
}

}  // namespace gcalc
