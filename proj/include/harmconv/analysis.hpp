#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "harmconv/convolution.hpp"
#include "harmconv/error.hpp"

namespace harmconv {

// ---------------------------------------------------------------------------
// Polynomials and the Schur-Cohn zero count

// Complex polynomial, coeffs[k] multiplies z^k; trailing zeros are trimmed.
class Poly {
 public:
  explicit Poly(std::vector<Cx> coeffs);

  int degree() const noexcept { return int(coeffs_.size()) - 1; }
  const std::vector<Cx>& coeffs() const noexcept { return coeffs_; }
  Cx operator[](int k) const { return coeffs_[std::size_t(k)]; }
  Cx operator()(Cx z) const;

  // p*(z) = z^d conj(p(1/conj z)): coefficients reversed and conjugated.
  Poly reciprocal() const;

 private:
  std::vector<Cx> coeffs_;
};

// One step of Cohn's rule: q1(z) = (conj(a_d) p(z) - a_0 p*(z)) / z.
// Requires |a_d| > |a_0|; otherwise throws CohnError(ReductionInapplicable).
Poly cohn_reduce(const Poly& p);

// Number of zeros in |z| < 1 by iterated Cohn reduction. Steps with
// |a_0| > |a_d| reduce the reciprocal polynomial instead. Throws
// CohnError(BoundaryDegenerate) when a step finds |a_d| ~ |a_0|, which is
// what a zero on or numerically on the unit circle produces.
int zeros_in_unit_disk(const Poly& p);

// p(z) = z^2 + (1+3a)/2 z + (1+a)/2 from the f0 * Fa dilatation.
Poly f0_dilatation_numerator(double a);

// ---------------------------------------------------------------------------
// Dilatation grid scans

struct GridSpec {
  std::vector<double> radii;  // strictly increasing, in (0, 0.999]
  int angles_count = 720;     // equispaced in [0, 2 pi)

  // Node (i, j) -> r_i e^{2 pi i j / K}; row-major index i*K + j.
  Cx node(std::size_t radius_index, int angle_index) const;
  std::size_t size() const noexcept { return radii.size() * std::size_t(angles_count); }
};

inline constexpr double kMaxGridRadius = 0.999;

// `count` radii with 1 - r geometric from 1 - r_min down to 1 - r_max.
std::vector<double> geometric_radii(int count, double r_min = 0.01, double r_max = kMaxGridRadius);
// 60 geometric radii toward 0.999, 720 angles.
GridSpec default_grid();
// Throws ParameterError when the invariants do not hold.
void validate(const GridSpec& grid);

struct Violation {
  Cx z;
  double modulus;
};

struct UnivalencyReport {
  double max_modulus = 0.0;
  Cx argmax{0.0};
  std::vector<Violation> violations;  // nodes with |w~| >= 1, row-major order
  GridSpec grid;
  std::vector<Cx> critical_points;    // nodes where (h*h_r)' vanished
  std::size_t skipped = 0;            // nodes refused by the singularity guard
};

// Evaluates |w~| at every node. Deterministic: the reduction runs in
// row-major order after all nodes are computed; ties keep the first node.
UnivalencyReport scan_dilatation(const ConvolutionSpec& spec, const GridSpec& grid);

// Dilatation at arbitrary points through the batch kernels.
// Entries are nullopt at critical points and guarded singular points.
std::vector<std::optional<Cx>> dilatation_at(const ConvolutionSpec& spec,
                                             const std::vector<Cx>& points);

// ---------------------------------------------------------------------------
// The auxiliary function J for f * f1

// J(z) = (1 + e z)(1 - z)/((1 + e) z) [2 - (1 - z)(1 - e z)/((1 + e) z) L(z)],
// L(z) = log((1 + e z)/(1 - z)) - log((1 - e z)/(1 + z)), e = e^{i theta}.
// Evaluated in a rearranged form free of cancellation near 0; J(0) = 2.
Cx eval_J(double theta, Cx z);

// The unsimplified definition
// (h1(z) - h1(-z))/(z h1'(z)) + e^{-i theta} (g1(z) - g1(-z))/(z^2 h1'(z)).
Cx eval_J_from_parts(double theta, Cx z);

// B(z) = |k (g1(z)-g1(-z))/(z^2 h1')|^2 - |k (h1(z)-h1(-z))/(z h1')|^2, k = (1-a)/(2(1+a)).
double b_quantity(double a, double theta, Cx z);

enum class BoundaryCase {
  Regular,         // closed-form Re J(e^{it})
  LimitAtOne,      // t = 0: J -> 0
  LimitAtMinusOne, // t = pi: J -> 0 (theta = 0) or infinity
  LimitAtPiMinusTheta,     // t = pi - theta: J -> 0
  LimitAtTwoPiMinusTheta,  // t = 2 pi - theta: J -> 4i tan(theta/2)
};

struct BoundaryValue {
  BoundaryCase kind = BoundaryCase::Regular;
  bool infinite = false;
  double re = 0.0;   // +inf when infinite
  Cx value{0.0};     // full boundary value when finite
};

// A - B for the boundary arguments
// A = arg((1 + e^{i(theta+t)})/(1 - e^{it})), B = arg((1 - e^{i(theta+t)})/(1 + e^{it})),
// as the piecewise constant {pi, -pi, 0}. theta in (-pi, pi), t off the special points.
double boundary_arg_gap(double theta, double t);

// Boundary behaviour of J at e^{it}; theta in (-pi, pi).
BoundaryValue J_boundary(double theta, double t);

// ---------------------------------------------------------------------------
// Univalency radius

struct RadiusEstimate {
  double radius = 1.0;      // 1.0 when no violation up to 0.999
  bool verified = false;    // full-grid pass at `radius` found no violation
  std::optional<double> first_violation;  // smallest violating radius seen
};

struct RadiusOptions {
  int angles = 1440;
  int coarse_radii = 60;
};

// Largest r (to tol) with max_{|z| = r} |w~| < 1, assuming the violation set
// grows with r: coarse ring scan, then bisection on the first bracket.
RadiusEstimate univalency_radius(const ConvolutionSpec& spec, double tol,
                                 const RadiusOptions& options = {});

}  // namespace harmconv
