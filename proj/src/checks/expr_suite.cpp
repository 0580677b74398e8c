#include "common.hpp"

namespace gcalc::checks {

namespace {

const std::vector<std::string> kCoords{"x", "y", "z"};

std::vector<std::string> coords_for(Rng& rng) {
  const int n = rng.integer(1, 3);
  return {kCoords.begin(), kCoords.begin() + n};
}

}  // namespace

void expr_suite(Suite& s) {
  // Second-order jets against central differences in long double.
  s.run("jet_vs_finite_difference", 1e-6, [&](Rng& rng, Acc& acc) {
    const int pairs = 4 * s.samples();
    const long double h = 1e-5L;
    for (int t = 0; t < pairs; ++t) {
      const auto coords = coords_for(rng);
      const std::size_t n = coords.size();
      const Expr e = expr::parse(random_whitelist_text(rng, coords, 3), coords);
      std::vector<double> p(n);
      for (auto& x : p) x = rng.uniform(-2, 2);
      const expr::Jet2 jet = expr::eval_jet2(e, p);
      std::vector<long double> q(p.begin(), p.end());
      auto f = [&](std::size_t k, long double dk, std::size_t l, long double dl) {
        std::vector<long double> r = q;
        r[k] += dk;
        r[l] += dl;
        return expr::evaluate<long double>(e, r);
      };
      for (std::size_t k = 0; k < n; ++k) {
        const long double g = (f(k, h, k, 0) - f(k, -h, k, 0)) / (2 * h);
        acc.add(rel_dev(jet.grad[k], static_cast<double>(g)));
        for (std::size_t l = 0; l < n; ++l) {
          long double hk;
          if (k == l) {
            hk = (f(k, h, k, 0) - 2 * f(k, 0, k, 0) + f(k, -h, k, 0)) / (h * h);
          } else {
            hk = (f(k, h, l, h) - f(k, h, l, -h) - f(k, -h, l, h) + f(k, -h, l, -h)) / (4 * h * h);
          }
          acc.add(rel_dev(jet.h(k, l), static_cast<double>(hk)));
        }
      }
      acc.sample();
    }
  });

  s.run("parse_print_roundtrip", 0.0, [&](Rng& rng, Acc& acc) {
    for (int t = 0; t < 4 * s.samples(); ++t) {
      const auto coords = coords_for(rng);
      const Expr e = expr::parse(random_whitelist_text(rng, coords, 4), coords);
      const std::string printed = expr::to_string(e, coords);
      const Expr back = expr::parse(printed, coords);
      acc.add(back == e && expr::to_string(back, coords) == printed ? 0.0 : 1.0);
      acc.sample();
    }
  });
}

}  // namespace gcalc::checks
