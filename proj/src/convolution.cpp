#include "harmconv/convolution.hpp"

#include <cmath>

#include <fmt/format.h>

#include "harmconv/complex_special.hpp"
#include "harmconv/quadrature.hpp"

namespace harmconv {
namespace {

constexpr double kMaxValueRadius = 0.999;

void add_point(std::vector<Cx>& points, Cx p) {
  for (const Cx& q : points)
    if (std::abs(p - q) < 1e-12) return;
  points.push_back(p);
}

}  // namespace

ConvolutionSpec make_convolution(double a, const MappingSpec& right) {
  if (right.family() == Family::Fa)
    throw ParameterError("make_convolution: right factor must be F0, F1 or Fn");
  ConvolutionSpec spec(make_fa(a), right);
  for (const Cx& s : right.singularities()) {
    add_point(spec.singular_, s);
    add_point(spec.singular_, -s);
  }
  return spec;
}

std::string ConvolutionSpec::describe() const {
  return fmt::format("Fa{{a={}}} * {}", a(), right_.describe());
}

void check_conv_evaluable(const ConvolutionSpec& spec, Cx z) {
  for (const Cx& s : spec.singularities()) {
    if (std::abs(z - s) < kSingularGuard)
      throw SingularityError(
          fmt::format("{}: z = ({}, {}) is within {} of the singular point ({}, {})",
                      spec.describe(), z.real(), z.imag(), kSingularGuard, s.real(), s.imag()),
          s);
  }
  if (!(std::abs(z) < 1.0))
    throw DomainError(fmt::format("{}: |z| = {} is outside the open unit disk", spec.describe(),
                                  std::abs(z)));
}

Cx conv_dilatation_f0(double a, Cx z) {
  if (!(a > -1.0 && a < 1.0)) throw ParameterError("conv_dilatation_f0: a must be in (-1, 1)");
  const double b = (1.0 + 3.0 * a) / 2.0;
  const double c = (1.0 + a) / 2.0;
  const Cx p = (z + b) * z + c;
  const Cx p_star = (c * z + b) * z + 1.0;
  return -z * p / p_star;
}

AnalyticPair conv_parts_f1(double a, double theta, Cx z) {
  const MappingSpec f1 = make_f1(theta);  // rejects theta = pi
  const ConvolutionSpec spec = make_convolution(a, f1);
  check_conv_evaluable(spec, z);
  const Cx e = f1.rotation();
  const Cx k = (1.0 - a) * e / (4.0 * (1.0 + e) * (1.0 + e));
  const Cx dilogs = li2(z) - li2(-z) + li2(e * z) - li2(-e * z);
  const Cx log_ratio = 2.0 * std::atanh(z);  // log((1+z)/(1-z))
  const Cx h1 = f1.h_form()(z);
  const Cx g1 = f1.g_form()(z);
  return {(1.0 + a) / 2.0 * h1 + k * (dilogs + (1.0 + std::conj(e)) * log_ratio),
          (1.0 + a) / 2.0 * g1 + k * (dilogs - (1.0 + e) * log_ratio)};
}

AnalyticPair conv_derivatives(const ConvolutionSpec& spec, Cx z) {
  check_conv_evaluable(spec, z);
  const double a = spec.a();
  const MappingSpec& r = spec.right();
  const Cx hp = eval_h_prime(r, z);
  const Cx gp = dilatation(r, z) * hp;
  return {(1.0 - a) / 4.0 * r.h_form().odd_quotient(z) + (1.0 + a) / 2.0 * hp,
          -(1.0 - a) / 4.0 * r.g_form().odd_quotient(z) + (1.0 + a) / 2.0 * gp};
}

Cx conv_dilatation(const ConvolutionSpec& spec, Cx z) {
  const AnalyticPair d = conv_derivatives(spec, z);
  if (std::abs(d.h) <= kCriticalThreshold)
    throw CriticalPointError(
        fmt::format("{}: (h*h_r)' vanishes at ({}, {})", spec.describe(), z.real(), z.imag()), z);
  return d.g / d.h;
}

AnalyticPair conv_parts_quadrature(const ConvolutionSpec& spec, Cx z) {
  check_conv_evaluable(spec, z);
  if (z == Cx(0.0)) return {0.0, 0.0};
  const auto integrand = [&](double s) -> std::array<Cx, 2> {
    const AnalyticPair d = conv_derivatives(spec, s * z);
    return {d.h * z, d.g * z};
  };
  const auto v = integrate_pair(integrand, 0.0, 1.0);
  return {v[0], v[1]};
}

Cx conv_value(const ConvolutionSpec& spec, Cx z) {
  // Relative slack so that std::polar(0.999, t) is accepted despite rounding.
  if (std::abs(z) > kMaxValueRadius * (1.0 + 1e-12))
    throw DomainError(fmt::format("conv_value: |z| = {} exceeds {}", std::abs(z),
                                  kMaxValueRadius));
  // Near theta = pi the dilogarithm form cancels at O(1/eps^2); integrate instead.
  if (spec.right().family() == Family::F1 && !spec.right().h_form().folded) {
    const AnalyticPair p = conv_parts_f1(spec.a(), spec.right().theta(), z);
    return p.h + std::conj(p.g);
  }
  const AnalyticPair p = conv_parts_quadrature(spec, z);
  return p.h + std::conj(p.g);
}

}  // namespace harmconv
