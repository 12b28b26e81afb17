#include <doctest.h>

#include <numbers>

#include "harmconv/kernels.hpp"
#include "support.hpp"

using namespace harmconv;
using test_support::disk_samples;

namespace {

constexpr double kPi = std::numbers::pi;

struct Batch {
  std::vector<double> re, im, hr, hi, gr, gi;
  explicit Batch(const std::vector<Cx>& z)
      : hr(z.size()), hi(z.size()), gr(z.size()), gi(z.size()) {
    for (const Cx p : z) {
      re.push_back(p.real());
      im.push_back(p.imag());
    }
  }
  kernels::PointsIn in() const { return {re, im}; }
  kernels::DerivativesOut out() { return {hr, hi, gr, gi}; }
  Cx h(std::size_t i) const { return {hr[i], hi[i]}; }
  Cx g(std::size_t i) const { return {gr[i], gi[i]}; }
};

std::vector<ConvolutionSpec> specs() {
  return {make_convolution(0.5, make_f0()),           make_convolution(0.5, make_f1(kPi / 6)),
          make_convolution(-0.9, make_f1(5 * kPi / 6)), make_convolution(0.5, make_fn(2, kPi)),
          make_convolution(0.0, make_fn(12, kPi / 2)),  make_convolution(0.9, make_fn(15, -kPi / 4)),
          make_convolution(0.3, make_fn(64, 1.0)),      make_convolution(-0.5, make_fn(7, kPi)),
          make_convolution(0.2, make_fn(4, kPi - 1e-5))};
}

// Points across the disk including the origin, tiny radii and the outer rim;
// 1003 points so the vector tail path runs.
std::vector<Cx> points() {
  std::vector<Cx> z = disk_samples(900, 0.999, 41);
  z.push_back(0.0);
  z.push_back(Cx(1e-9, -2e-9));
  z.push_back(Cx(-3e-5, 1e-5));
  for (int k = 0; k < 100; ++k) z.push_back(std::polar(0.999, 2 * kPi * (k + 0.5) / 100));
  return z;
}

double rel(Cx a, Cx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Forward-error scale of the derivative pair at z: magnitudes of the rational
// pieces plus, per log term, |c| (|atanh(w)| + |w|/|1 - w^2|)/|z| with w = u z.
// The second part is the condition number of atanh, which is what separates
// two correctly rounded evaluations that round w = u z differently.
double condition_scale(const kernels::DerivativeParams& p, Cx z) {
  const Cx one_minus_z2 = 1.0 - z * z;
  double s = 1.0 + std::abs(1.0 / ((1.0 + p.rotation * std::pow(z, p.power)) * (1.0 - z) * (1.0 - z))) +
             std::abs(2.0 * p.geometric / one_minus_z2) + std::abs(4.0 * p.quadratic / (one_minus_z2 * one_minus_z2));
  if (z == Cx(0.0)) return s + std::abs(p.log_limit);
  for (std::size_t j = 0; j < p.coef_re.size(); ++j) {
    const Cx w = Cx(p.unit_re[j], p.unit_im[j]) * z;
    s += std::abs(Cx(p.coef_re[j], p.coef_im[j])) * (std::abs(std::atanh(w)) + std::abs(w) / std::abs(1.0 - w * w)) /
         std::abs(z);
  }
  return s;
}

}  // namespace

TEST_CASE("scalar kernel matches conv_derivatives") {
  const auto z = points();
  for (const auto& spec : specs()) {
    CAPTURE(spec.describe());
    Batch b(z);
    kernels::derivatives_scalar(kernels::make_params(spec), b.in(), b.out());
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const AnalyticPair d = conv_derivatives(spec, z[i]);
      worst = std::max({worst, rel(b.h(i), d.h), rel(b.g(i), d.g)});
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("AVX2 kernel is equivalent to the scalar reference") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2/FMA unavailable on this machine; equivalence not exercised");
    return;
  }
  const auto z = points();
  for (const auto& spec : specs()) {
    CAPTURE(spec.describe());
    const auto params = kernels::make_params(spec);
    Batch s(z), v(z);
    kernels::derivatives(params, s.in(), s.out(), kernels::Isa::Scalar);
    kernels::derivatives(params, v.in(), v.out(), kernels::Isa::Avx2);
    double worst_rel = 0.0, worst_scaled = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double d = std::max(std::abs(v.h(i) - s.h(i)), std::abs(v.g(i) - s.g(i)));
      worst_rel = std::max({worst_rel, rel(v.h(i), s.h(i)), rel(v.g(i), s.g(i))});
      worst_scaled = std::max(worst_scaled, d / condition_scale(params, z[i]));
    }
    CHECK(worst_scaled < 1e-14);
    CHECK(worst_rel < 1e-11);
  }
}

TEST_CASE("AVX2 kernel handles every tail length") {
  if (!kernels::avx2_available()) return;
  const auto params = kernels::make_params(make_convolution(0.2, make_fn(3, 0.4)));
  for (std::size_t len = 0; len < 9; ++len) {
    const auto z = disk_samples(len, 0.9, 42 + len);
    Batch s(z), v(z);
    kernels::derivatives(params, s.in(), s.out(), kernels::Isa::Scalar);
    kernels::derivatives(params, v.in(), v.out(), kernels::Isa::Avx2);
    for (std::size_t i = 0; i < len; ++i) CHECK(rel(v.h(i), s.h(i)) < 1e-12);
  }
}

TEST_CASE("isa names") {
  CHECK(kernels::to_string(kernels::Isa::Scalar) == "scalar");
  CHECK(kernels::to_string(kernels::Isa::Avx2) == "avx2");
}
