#pragma once

#include <vector>

#include "harmconv/error.hpp"
#include "harmconv/mappings.hpp"

namespace harmconv {

// The pair (f, f_r) with f = Fa{a} on the left and f_r one of F0, F1, Fn.
class ConvolutionSpec {
 public:
  double a() const noexcept { return left_.a(); }
  const MappingSpec& left() const noexcept { return left_; }
  const MappingSpec& right() const noexcept { return right_; }
  // Singular points of the right factor and their negatives.
  const std::vector<Cx>& singularities() const noexcept { return singular_; }
  std::string describe() const;

 private:
  friend ConvolutionSpec make_convolution(double a, const MappingSpec& right);
  ConvolutionSpec(MappingSpec left, MappingSpec right)
      : left_(std::move(left)), right_(std::move(right)) {}

  MappingSpec left_;
  MappingSpec right_;
  std::vector<Cx> singular_;
};

ConvolutionSpec make_convolution(double a, const MappingSpec& right);

// -z p(z)/p*(z) with p(z) = z^2 + (1+3a)/2 z + (1+a)/2: dilatation of f0 * Fa{a}.
Cx conv_dilatation_f0(double a, Cx z);

struct AnalyticPair {
  Cx h;
  Cx g;
};

// (h*h_1)(z) and (g*g_1)(z) through the dilogarithm closed forms.
AnalyticPair conv_parts_f1(double a, double theta, Cx z);

// ((h*h_r)'(z), (g*g_r)'(z)).
AnalyticPair conv_derivatives(const ConvolutionSpec& spec, Cx z);

// Magnitude of (h*h_r)' below which the dilatation is reported as a pole.
inline constexpr double kCriticalThreshold = 1e-14;

// (g*g_r)'/(h*h_r)'. Throws CriticalPointError where (h*h_r)' vanishes.
Cx conv_dilatation(const ConvolutionSpec& spec, Cx z);

// Value of the convolved harmonic map H(z) + conj(G(z)), |z| <= 0.999.
// F1 uses the dilogarithm forms, F0/Fn radial quadrature of conv_derivatives.
Cx conv_value(const ConvolutionSpec& spec, Cx z);

// (H(z), G(z)) by radial quadrature; available for every right family.
AnalyticPair conv_parts_quadrature(const ConvolutionSpec& spec, Cx z);

void check_conv_evaluable(const ConvolutionSpec& spec, Cx z);

}  // namespace harmconv
