#pragma once

// Batch evaluation of ((h*h_r)', (g*g_r)') over many grid points.
//
// The scalar variant is the reference; the AVX2/FMA variant evaluates four
// points per lane group with its own log/atan polynomials and is selected at
// runtime when the CPU supports it. Both take structure-of-arrays buffers.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "harmconv/convolution.hpp"

namespace harmconv::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

// The right factor flattened: h_r = G z/(1-z) + Q z(2-z)/(1-z)^2 + sum c_j log(1 - u_j z),
// g_r = z/(1-z) - h_r, h_r' = 1/((1 + rot z^n)(1-z)^2).
struct DerivativeParams {
  double a = 0.0;
  Cx rotation{-1.0};
  int power = 1;
  Cx geometric{0.0};
  Cx quadratic{0.0};
  std::vector<double> coef_re, coef_im, unit_re, unit_im;
  // sum_j c_j u_j, the z -> 0 limit of sum_j c_j atanh(u_j z)/z.
  Cx log_limit{0.0};
  // Theta near pi. The AVX2 variant hands these parameter sets to the scalar one.
  std::optional<FoldedLog> folded;
};

DerivativeParams make_params(const ConvolutionSpec& spec);

struct PointsIn {
  std::span<const double> re;
  std::span<const double> im;
};

struct DerivativesOut {
  std::span<double> hp_re;
  std::span<double> hp_im;
  std::span<double> gp_re;
  std::span<double> gp_im;
};

// No singularity guard: callers pass points strictly inside the unit disk.
void derivatives_scalar(const DerivativeParams& params, PointsIn in, DerivativesOut out);

#if defined(HARMCONV_HAVE_AVX2)
void derivatives_avx2(const DerivativeParams& params, PointsIn in, DerivativesOut out);
#endif

// True when the AVX2 variant is compiled in and the CPU reports AVX2 and FMA.
bool avx2_available();

// The variant used by default: HARMCONV_ISA=scalar|avx2 overrides detection
// (an unavailable request falls back to scalar).
Isa active_isa();

void derivatives(const DerivativeParams& params, PointsIn in, DerivativesOut out,
                 Isa isa = active_isa());

}  // namespace harmconv::kernels
