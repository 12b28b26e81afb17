#include <algorithm>
#include <cmath>

#include "harmconv/analysis.hpp"

namespace harmconv {
namespace {

// Relative gap | |a_d|^2 - |a_0|^2 | below which a reduction step is degenerate.
constexpr double kDegenerateGap = 1e-9;

std::vector<Cx> trimmed(std::vector<Cx> c) {
  while (c.size() > 1 && c.back() == Cx(0.0)) c.pop_back();
  return c;
}

Poly normalized(const Poly& p) {
  double scale = 0.0;
  for (const Cx& c : p.coeffs()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return p;
  std::vector<Cx> c = p.coeffs();
  for (Cx& x : c) x /= scale;
  return Poly(std::move(c));
}

// (conj(a_d) p - a_0 p*)/z without the precondition check.
Poly reduce_unchecked(const Poly& p) {
  const int d = p.degree();
  const Cx ad = p[d], a0 = p[0];
  std::vector<Cx> q(std::size_t(d), Cx(0.0));
  for (int k = 0; k < d; ++k) q[std::size_t(k)] = std::conj(ad) * p[k + 1] - a0 * std::conj(p[d - k - 1]);
  return Poly(std::move(q));
}

}  // namespace

Poly::Poly(std::vector<Cx> coeffs) : coeffs_(trimmed(std::move(coeffs))) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Cx Poly::operator()(Cx z) const {
  Cx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::reciprocal() const {
  std::vector<Cx> c(coeffs_.rbegin(), coeffs_.rend());
  for (Cx& x : c) x = std::conj(x);
  return Poly(std::move(c));
}

Poly cohn_reduce(const Poly& p) {
  if (p.degree() < 1) throw ParameterError("cohn_reduce: degree must be >= 1");
  if (std::abs(p[p.degree()]) <= std::abs(p[0]))
    throw CohnError(CohnError::Kind::ReductionInapplicable,
                    "cohn_reduce: |a_d| <= |a_0|, Cohn's rule does not reduce this polynomial");
  return reduce_unchecked(p);
}

int zeros_in_unit_disk(const Poly& input) {
  if (input.degree() < 1) return 0;
  if (input.coeffs() == std::vector<Cx>(input.coeffs().size(), Cx(0.0)))
    throw ParameterError("zeros_in_unit_disk: zero polynomial");
  // zeros(input) = sign * zeros(p) + offset throughout.
  int sign = 1;
  int offset = 0;
  Poly p = normalized(input);
  while (p.degree() >= 1) {
    const int d = p.degree();
    const double lead2 = std::norm(p[d]);
    const double const2 = std::norm(p[0]);
    if (std::abs(lead2 - const2) <= kDegenerateGap * (lead2 + const2))
      throw CohnError(CohnError::Kind::BoundaryDegenerate,
                      "zeros_in_unit_disk: |a_d| = |a_0| in a reduction step "
                      "(zero on or near the unit circle)");
    const Poly q = normalized(reduce_unchecked(p));
    if (lead2 > const2) {
      // Rouche: conj(a_d) p dominates on the circle, q has p's zeros, one of them at 0.
      offset += sign;
    } else {
      // a_0 p* dominates: q has the d - zeros(p) zeros of p*, one of them at 0.
      offset += sign * (d - 1);
      sign = -sign;
    }
    p = q;
  }
  return offset;
}

Poly f0_dilatation_numerator(double a) {
  return Poly({(1.0 + a) / 2.0, (1.0 + 3.0 * a) / 2.0, 1.0});
}

}  // namespace harmconv
