#include "harmconv/complex_special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace harmconv {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDiskSlack = 1e-12;

// B_{2k} / (2k+1)!, k = 1..20.
constexpr std::array<double, 20> kBernoulliOverFactorial = {
    2.7777777777777777778e-2,   -2.7777777777777777778e-4,
    4.7241118669690098262e-6,   -9.1857730746619635508e-8,
    1.8978869988970999072e-9,   -4.0647616451442255268e-11,
    8.9216910204564525552e-13,  -1.9939295860721075687e-14,
    4.5189800296199181917e-16,  -1.0356517612181247014e-17,
    2.3952186210261867457e-19,  -5.5817858743250093363e-21,
    1.3091507554183212858e-22,  -3.0874198024267402932e-24,
    7.3159756527022034204e-26,  -1.7408456572340007410e-27,
    4.1576356446138997196e-29,  -9.9621484882846221032e-31,
    2.3940344248961653005e-32,  -5.7683473553673900843e-34,
};

Cx li2_series(Cx z) {
  Cx term = z;
  Cx sum = z;
  for (int k = 2; k < 200; ++k) {
    term *= z;
    const Cx add = term / double(k * k);
    sum += add;
    if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// Li2(z) = sum_n B_n u^{n+1}/(n+1)!, u = -log(1-z); converges for |u| < 2pi.
Cx li2_bernoulli(Cx z) {
  const Cx u = -std::log(1.0 - z);
  const Cx u2 = u * u;
  // Odd powers u^{2k+1}, summed from the small end.
  Cx odd = 0.0;
  for (int k = int(kBernoulliOverFactorial.size()); k >= 1; --k)
    odd = odd * u2 + kBernoulliOverFactorial[k - 1];
  return u - 0.25 * u2 + odd * u2 * u;
}

}  // namespace

Cx log_principal(Cx z) {
  if (z == Cx(0.0, 0.0)) throw DomainError("log_principal: argument is zero");
  // std::log returns arg in [-pi, pi]; -pi only for a -0.0 imaginary part.
  double arg = std::atan2(z.imag(), z.real());
  if (arg == -kPi) arg = kPi;
  return {std::log(std::abs(z)), arg};
}

Cx li2(Cx z) {
  const double r = std::abs(z);
  if (!(r <= 1.0 + kDiskSlack))
    throw DomainError("li2: |z| > 1, no continuation outside the closed disk");
  if (r > 1.0) z /= r;
  if (z == Cx(1.0, 0.0)) return kPi * kPi / 6.0;
  if (r <= 0.5) return li2_series(z);
  if (z.real() <= 0.5) return li2_bernoulli(z);
  const Cx w = 1.0 - z;
  return kPi * kPi / 6.0 - std::log(z) * std::log(w) - li2_bernoulli(w);
}

Cx atanh_minus_identity(Cx w) {
  if (std::abs(w) >= 0.1) return std::atanh(w) - w;
  const Cx w2 = w * w;
  Cx sum = 0.0;
  for (int k = 10; k >= 0; --k) sum = sum * w2 + 1.0 / double(2 * k + 3);
  return sum * w2 * w;
}

Cx log1p_remainder(Cx d) {
  if (std::abs(d) >= 0.25) {
    if (d == Cx(-1.0)) throw DomainError("log1p_remainder: log of zero");
    return std::log(1.0 + d) - d + 0.5 * d * d;
  }
  // sum_{k>=3} (-1)^{k+1} d^k / k; 0.25^40 / 40 is far below the d^3/3 scale.
  Cx sum = 0.0;
  for (int k = 42; k >= 3; --k) sum = sum * d + ((k & 1) ? 1.0 : -1.0) / double(k);
  return sum * d * d * d;
}

}  // namespace harmconv
