#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "harmconv/analysis.hpp"
#include "harmconv/complex_special.hpp"

namespace harmconv {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpecialPointTol = 1e-12;

double require_theta(double theta, const char* who) {
  if (!std::isfinite(theta)) throw ParameterError(fmt::format("{}: theta must be finite", who));
  const double t = reduce_angle(theta);
  if (std::abs(std::abs(t) - kPi) <= 1e-12)
    throw ParameterError(fmt::format("{}: theta = pi is excluded", who));
  return t;
}

// Circular distance on [0, 2 pi).
double angle_gap(double t, double s) {
  double d = std::fmod(std::abs(t - s), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

double wrap_2pi(double t) {
  double r = std::fmod(t, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  return r;
}

}  // namespace

Cx eval_J(double theta, Cx z) {
  const double th = require_theta(theta, "eval_J");
  const Cx e = std::polar(1.0, th);
  for (const Cx s : {Cx(1.0), Cx(-1.0), -std::conj(e), std::conj(e)})
    if (std::abs(z - s) < kSingularGuard)
      throw SingularityError(fmt::format("eval_J: z is within {} of ({}, {})", kSingularGuard,
                                         s.real(), s.imag()),
                             s);
  if (!(std::abs(z) < 1.0)) throw DomainError("eval_J: |z| must be < 1");

  // L(z) = 2 atanh(e z) + 2 atanh(z) = 2 (1 + e) z + R(z), R = O(z^3), so
  // J = (1 + e z)(1 - z) [2 - 2 e z/(1 + e) - (1 - z)(1 - e z) R / ((1 + e)^2 z^2)].
  const Cx one_e = 1.0 + e;
  Cx r_over_z2 = 0.0;
  if (z != Cx(0.0))
    r_over_z2 = 2.0 * (atanh_minus_identity(e * z) + atanh_minus_identity(z)) / (z * z);
  const Cx bracket =
      2.0 - 2.0 * e * z / one_e - (1.0 - z) * (1.0 - e * z) * r_over_z2 / (one_e * one_e);
  return (1.0 + e * z) * (1.0 - z) * bracket;
}

Cx eval_J_from_parts(double theta, Cx z) {
  const MappingSpec f1 = make_f1(require_theta(theta, "eval_J_from_parts"));
  const Cx hp = eval_h_prime(f1, z);
  const Cx dh = eval_h(f1, z) - eval_h(f1, -z);
  const Cx dg = eval_g(f1, z) - eval_g(f1, -z);
  return dh / (z * hp) + std::conj(f1.rotation()) * dg / (z * z * hp);
}

double b_quantity(double a, double theta, Cx z) {
  const MappingSpec f1 = make_f1(require_theta(theta, "b_quantity"));
  const double k = (1.0 - a) / (2.0 * (1.0 + a));
  const Cx hp = eval_h_prime(f1, z);
  const Cx dh = eval_h(f1, z) - eval_h(f1, -z);
  const Cx dg = eval_g(f1, z) - eval_g(f1, -z);
  return std::norm(k * dg / (z * z * hp)) - std::norm(k * dh / (z * hp));
}

double boundary_arg_gap(double theta, double t) {
  const double th = require_theta(theta, "boundary_arg_gap");
  t = wrap_2pi(t);
  if (th >= 0.0) {
    if (t < kPi - th) return kPi;
    if (t < kPi) return 0.0;
    if (t < 2.0 * kPi - th) return -kPi;
    return 0.0;
  }
  // theta in (-pi, 0): the special points reorder to 0 < -theta < pi < pi - theta < 2 pi.
  const double phi = -th;
  if (t < phi) return 0.0;
  if (t < kPi) return kPi;
  if (t < kPi + phi) return 0.0;
  return -kPi;
}

BoundaryValue J_boundary(double theta, double t) {
  const double th = require_theta(theta, "J_boundary");
  t = wrap_2pi(t);
  BoundaryValue out;

  if (angle_gap(t, 0.0) < kSpecialPointTol) {
    out.kind = BoundaryCase::LimitAtOne;
    return out;
  }
  if (angle_gap(t, kPi) < kSpecialPointTol) {
    out.kind = BoundaryCase::LimitAtMinusOne;
    if (th != 0.0) {
      out.infinite = true;
      out.re = std::numeric_limits<double>::infinity();
      out.value = {std::numeric_limits<double>::infinity(), 0.0};
    }
    return out;
  }
  if (angle_gap(t, kPi - th) < kSpecialPointTol) {
    out.kind = BoundaryCase::LimitAtPiMinusTheta;
    return out;
  }
  if (angle_gap(t, 2.0 * kPi - th) < kSpecialPointTol) {
    out.kind = BoundaryCase::LimitAtTwoPiMinusTheta;
    out.value = {0.0, 4.0 * std::tan(th / 2.0)};
    return out;
  }

  const double half_t = t / 2.0, half_sum = (th + t) / 2.0, half_th = th / 2.0;
  const double s = std::sin(half_t), c = std::cos(half_sum);
  const double big_s = std::sin(half_sum), big_c = std::cos(half_th);
  const double gap = boundary_arg_gap(th, t);
  out.kind = BoundaryCase::Regular;
  out.re = 2.0 * s * s * std::sin(th + t) / (big_c * big_c) * gap;
  // Full value: log|ratio| supplies the real part of the bracketed logarithm.
  const double log_mod = std::log(std::abs(c) * std::abs(std::cos(half_t)) /
                                  (std::abs(s) * std::abs(big_s)));
  const Cx prefactor(0.0, -2.0 * s * c / big_c);
  const Cx bracket = 2.0 + (2.0 * s * big_s / big_c) * Cx(log_mod, gap);
  out.value = prefactor * bracket;
  return out;
}

}  // namespace harmconv
