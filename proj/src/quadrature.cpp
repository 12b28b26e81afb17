#include "harmconv/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace harmconv {
namespace {

GaussLegendre16 build_rule() {
  constexpr int n = 16;
  GaussLegendre16 rule{};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const double p = std::legendre(n, x);
      const double dp = n * (x * p - std::legendre(n - 1, x)) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = n * (x * std::legendre(n, x) - std::legendre(n - 1, x)) / (x * x - 1.0);
    rule.nodes[std::size_t(i)] = x;
    rule.weights[std::size_t(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

using Pair = std::array<Cx, 2>;
using Integrand = std::function<Pair(double)>;

Pair panel(const Integrand& f, double lo, double hi) {
  const auto& rule = gauss_legendre16();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Pair sum{Cx(0.0), Cx(0.0)};
  for (std::size_t i = 0; i < 16; ++i) {
    const Pair v = f(mid + half * rule.nodes[i]);
    sum[0] += rule.weights[i] * v[0];
    sum[1] += rule.weights[i] * v[1];
  }
  sum[0] *= half;
  sum[1] *= half;
  return sum;
}

Pair refine(const Integrand& f, double lo, double hi, const Pair& whole, double abs_tol,
            const QuadratureOptions& options, int depth) {
  const double mid = 0.5 * (lo + hi);
  const Pair left = panel(f, lo, mid);
  const Pair right = panel(f, mid, hi);
  const Pair both{left[0] + right[0], left[1] + right[1]};
  const double err = std::max(std::abs(both[0] - whole[0]), std::abs(both[1] - whole[1]));
  const double scale = std::max(std::abs(both[0]), std::abs(both[1]));
  if (err <= std::max(abs_tol, options.rel_tol * scale)) return both;
  if (depth >= options.max_depth)
    throw QuadratureError(fmt::format(
        "integrate_pair: tolerance not met on [{}, {}] at depth {} (error {:.3e})", lo, hi,
        depth, err));
  const Pair l = refine(f, lo, mid, left, 0.5 * abs_tol, options, depth + 1);
  const Pair r = refine(f, mid, hi, right, 0.5 * abs_tol, options, depth + 1);
  return {l[0] + r[0], l[1] + r[1]};
}

}  // namespace

const GaussLegendre16& gauss_legendre16() {
  static const GaussLegendre16 rule = build_rule();
  return rule;
}

std::array<Cx, 2> integrate_pair(const std::function<std::array<Cx, 2>(double)>& f, double lo,
                                 double hi, const QuadratureOptions& options) {
  if (lo == hi) return {Cx(0.0), Cx(0.0)};
  return refine(f, lo, hi, panel(f, lo, hi), options.abs_tol, options, 0);
}

}  // namespace harmconv
