#pragma once

#include <array>
#include <functional>

#include "harmconv/error.hpp"

namespace harmconv {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  // Accepted when the error estimate is below max(abs_tol, rel_tol * |I|).
  double rel_tol = 1e-13;
  int max_depth = 12;
};

// Integrates a pair of complex functions over [lo, hi] simultaneously with
// adaptive bisection of a 16-point Gauss-Legendre rule. The error estimate on
// a panel is the difference between one 16-point pass and two half passes.
// Throws QuadratureError when a panel at max_depth still misses tolerance.
std::array<Cx, 2> integrate_pair(const std::function<std::array<Cx, 2>(double)>& f, double lo,
                                 double hi, const QuadratureOptions& options = {});

// Nodes and weights on [-1, 1].
struct GaussLegendre16 {
  std::array<double, 16> nodes;
  std::array<double, 16> weights;
};
const GaussLegendre16& gauss_legendre16();

}  // namespace harmconv
