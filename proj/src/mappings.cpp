#include "harmconv/mappings.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "harmconv/complex_special.hpp"

namespace harmconv {
namespace {

constexpr double kPi = std::numbers::pi;
// Below this distance of theta from pi the folded form replaces the general one.
constexpr double kNearPi = 0.5;

double csc2(double x) {
  const double s = std::sin(x);
  return 1.0 / (s * s);
}

// g = shear_scale * z/(1-z) - h.
LogRationalForm complement(const LogRationalForm& h, double shear_scale) {
  LogRationalForm g;
  g.geometric = shear_scale - h.geometric;
  g.quadratic = -h.quadratic;
  g.logs.reserve(h.logs.size());
  for (const auto& t : h.logs) g.logs.push_back({-t.coef, t.unit});
  if (h.folded) g.folded = FoldedLog{-h.folded->coef, h.folded->step};
  return g;
}

LogRationalForm h_form_f0() {
  LogRationalForm h;
  h.quadratic = 0.5;
  return h;
}

LogRationalForm h_form_fa(double a) {
  LogRationalForm h;
  h.geometric = (1.0 + a) / 2.0;
  const double c = (1.0 - a) / 4.0;
  h.logs = {{c, -1.0}, {-c, 1.0}};
  return h;
}

// log((1 + e z)/(1 - z)) form; the n = 1 case of the general partial fractions.
LogRationalForm h_form_f1(Cx e) {
  LogRationalForm h;
  const Cx c = e / ((1.0 + e) * (1.0 + e));
  h.geometric = 1.0 / (1.0 + e);
  h.logs = {{c, -e}, {-c, 1.0}};
  return h;
}

// theta = pi: partial fractions over the n-th roots of unity.
LogRationalForm h_form_fn_pi(int n) {
  LogRationalForm h;
  const double dn = n;
  h.geometric = (dn - 1.0) / (2.0 * dn);
  h.quadratic = 1.0 / (2.0 * dn);
  h.logs.push_back({-(dn * dn - 1.0) / (12.0 * dn), 1.0});
  for (int k = 1; k < n; ++k) {
    const double angle = 2.0 * kPi * k / dn;
    h.logs.push_back({csc2(kPi * k / dn) / (4.0 * dn), std::polar(1.0, -angle)});
  }
  return h;
}

// theta != pi: partial fractions over the roots of 1 + e^{i theta} z^n.
LogRationalForm h_form_fn_general(int n, double theta) {
  LogRationalForm h;
  const double dn = n;
  const Cx e = std::polar(1.0, theta);
  h.geometric = 1.0 / (1.0 + e);
  h.logs.push_back({-dn * e / ((1.0 + e) * (1.0 + e)), 1.0});
  for (int k = 0; k < n; ++k) {
    const double angle = ((2 * k + 1) * kPi - theta) / dn;
    h.logs.push_back({csc2(angle / 2.0) / (4.0 * dn), std::polar(1.0, -angle)});
  }
  return h;
}

// x - sin x, summed as a series below |x| = 1.
double x_minus_sin(double x) {
  if (std::abs(x) >= 1.0) return x - std::sin(x);
  const double x2 = x * x;
  double term = x * x2 / 6.0, sum = 0.0;
  for (int j = 1; j <= 12; ++j) {
    sum += term;
    term *= -x2 / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
  }
  return sum;
}

// csc x - 1/x and csc^2 x - 1/x^2 without the cancellation at small x.
double csc_tail(double x) {
  if (x == 0.0) return 0.0;
  return x_minus_sin(x) / (x * std::sin(x));
}

double csc2_tail(double x) {
  if (x == 0.0) return 1.0 / 3.0;
  const double d = x_minus_sin(x);
  const double xs = x * std::sin(x);
  return d * (2.0 * x - d) / (xs * xs);
}

// theta = pi - eps with small eps (either side of pi). The root e^{-i eps/n} of
// 1 + e z^n nearly meets z = 1 and the general partial fractions cancel at
// O(1/eps^2). Its log is folded against log(1-z) and z/(1-z), with every
// coefficient written as a finite expression in eps.
LogRationalForm h_form_near_pi(int n, double eps) {
  LogRationalForm h;
  const double dn = n;
  const double alpha = eps / (2.0 * dn), beta = eps / 2.0;
  const Cx ea = std::polar(1.0, -alpha), eb = std::polar(1.0, beta);
  const Cx ea_minus_eb = Cx(0.0, -2.0) * std::sin((alpha + beta) / 2.0) * std::polar(1.0, (beta - alpha) / 2.0);
  const Cx linear = Cx(0.0, 0.5) * (2.0 / eps * ea_minus_eb + ea * csc_tail(alpha) / dn - eb * csc_tail(beta));
  const Cx square = ea * ea / (2.0 * dn);
  h.geometric = linear - 2.0 * square;  // z^2/(1-z)^2 = z(2-z)/(1-z)^2 - 2 z/(1-z)
  h.quadratic = square;
  h.logs.push_back({(csc2_tail(alpha) / dn - dn * csc2_tail(beta)) / 4.0, 1.0});
  for (int k = 1; k < n; ++k) {
    const double angle = (2.0 * kPi * k + eps) / dn;
    h.logs.push_back({csc2(angle / 2.0) / (4.0 * dn), std::polar(1.0, -angle)});
  }
  const double s = std::sin(alpha);
  h.folded = FoldedLog{1.0 / (4.0 * dn * s * s), Cx(0.0, 2.0 * s) * ea};
  return h;
}

void add_singularity(std::vector<Cx>& points, Cx p) {
  for (const Cx& q : points)
    if (std::abs(p - q) < 1e-12) return;
  points.push_back(p);
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::F0: return "f0";
    case Family::Fa: return "fa";
    case Family::F1: return "f1";
    case Family::Fn: return "fn";
  }
  return "?";
}

double reduce_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Cx LogRationalForm::operator()(Cx z) const {
  const Cx w = 1.0 - z;
  Cx value = geometric * z / w;
  if (quadratic != 0.0) value += quadratic * z * (2.0 - z) / (w * w);
  for (const auto& t : logs) value += t.coef * std::log(1.0 - t.unit * z);
  if (folded) value += folded->coef * log1p_remainder(folded->step * z / w);
  return value;
}

Cx LogRationalForm::odd_quotient(Cx z) const {
  // z/(1-z) + z/(1+z) = 2z/(1-z^2);  z(2-z)/(1-z)^2 + z(2+z)/(1+z)^2 = 4z/(1-z^2)^2;
  // log(1-uz) - log(1+uz) = -2 atanh(uz).
  const Cx q = 1.0 - z * z;
  Cx value = 2.0 * geometric / q + 4.0 * quadratic / (q * q);
  if (z == Cx(0.0)) {
    for (const auto& t : logs) value -= 2.0 * t.coef * t.unit;
    return value;
  }
  Cx logs_sum = 0.0;
  for (const auto& t : logs) logs_sum += t.coef * std::atanh(t.unit * z);
  value -= 2.0 * logs_sum / z;
  if (folded)  // odd in z to third order, so zero at the origin
    value += folded->coef *
             (log1p_remainder(folded->step * z / (1.0 - z)) - log1p_remainder(-folded->step * z / (1.0 + z))) / z;
  return value;
}

std::string MappingSpec::describe() const {
  switch (family_) {
    case Family::F0: return "F0";
    case Family::Fa: return fmt::format("Fa{{a={}}}", a_);
    case Family::F1: return fmt::format("F1{{theta={}}}", theta_);
    case Family::Fn: return fmt::format("Fn{{n={}, theta={}}}", n_, theta_);
  }
  return "?";
}

MappingSpec make_mapping(Family family, std::optional<double> a, std::optional<double> theta,
                         std::optional<int> n) {
  MappingSpec spec;
  spec.family_ = family;
  spec.singular_.push_back(1.0);

  auto require_theta = [&]() {
    if (!theta || !std::isfinite(*theta))
      throw ParameterError(to_string(family) + ": theta is required and must be finite");
    return reduce_angle(*theta);
  };
  auto is_pi = [](double t) { return std::abs(std::abs(t) - kPi) <= 1e-12; };
  // Signed eps with e^{i theta} = -e^{-i eps}; nonzero only when the folded form is needed.
  auto gap_to_pi = [](double t) {
    const double eps = t > 0.0 ? kPi - t : -kPi - t;
    return std::abs(eps) < kNearPi ? eps : 0.0;
  };

  switch (family) {
    case Family::F0:
      spec.rotation_ = -1.0;
      spec.power_ = 1;
      spec.theta_ = kPi;
      spec.h_form_ = h_form_f0();
      break;

    case Family::Fa: {
      if (!a || !std::isfinite(*a) || !(*a > -1.0 && *a < 1.0))
        throw ParameterError("Fa: a must satisfy -1 < a < 1");
      spec.a_ = *a;
      spec.shear_scale_ = 1.0 + *a;
      spec.h_form_ = h_form_fa(*a);
      add_singularity(spec.singular_, -1.0);
      break;
    }

    case Family::F1: {
      const double t = require_theta();
      if (is_pi(t))
        throw ParameterError(
            "F1: theta = pi makes 1 + e^{i theta} vanish; use Fn with n = 1, theta = pi");
      spec.theta_ = t;
      spec.power_ = 1;
      if (const double eps = gap_to_pi(t); eps != 0.0) {
        spec.rotation_ = -std::polar(1.0, -eps);
        spec.h_form_ = h_form_near_pi(1, eps);
      } else {
        spec.rotation_ = std::polar(1.0, t);
        spec.h_form_ = h_form_f1(spec.rotation_);
      }
      add_singularity(spec.singular_, -std::conj(spec.rotation_));
      break;
    }

    case Family::Fn: {
      if (!n || *n < 1) throw ParameterError("Fn: n must be a positive integer");
      if (*n > 64) throw ParameterError("Fn: n > 64 is not supported");
      const double t = require_theta();
      spec.n_ = *n;
      spec.power_ = *n;
      spec.theta_is_pi_ = is_pi(t);
      spec.theta_ = spec.theta_is_pi_ ? kPi : t;
      if (spec.theta_is_pi_) {
        spec.rotation_ = -1.0;
        spec.h_form_ = h_form_fn_pi(*n);
      } else if (const double eps = gap_to_pi(t); eps != 0.0) {
        spec.rotation_ = -std::polar(1.0, -eps);
        spec.h_form_ = h_form_near_pi(*n, eps);
      } else {
        spec.rotation_ = std::polar(1.0, t);
        spec.h_form_ = h_form_fn_general(*n, t);
      }
      for (int k = 0; k < *n; ++k)
        add_singularity(spec.singular_,
                        std::polar(1.0, ((2 * k + 1) * kPi - spec.theta_) / *n));
      break;
    }
  }
  spec.g_form_ = complement(spec.h_form_, spec.shear_scale_);
  return spec;
}

void check_evaluable(const MappingSpec& spec, Cx z) {
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

Cx eval_h(const MappingSpec& spec, Cx z) {
  check_evaluable(spec, z);
  return spec.h_form()(z);
}

Cx eval_g(const MappingSpec& spec, Cx z) {
  check_evaluable(spec, z);
  return spec.g_form()(z);
}

Cx dilatation(const MappingSpec& spec, Cx z) {
  if (spec.family() == Family::Fa) return (z + spec.a()) / (1.0 + spec.a() * z);
  return spec.rotation() * ipow(z, spec.dilatation_power());
}

Cx eval_h_prime(const MappingSpec& spec, Cx z) {
  check_evaluable(spec, z);
  const Cx w = 1.0 - z;
  return spec.shear_scale() / ((1.0 + dilatation(spec, z)) * w * w);
}

Cx eval_g_prime(const MappingSpec& spec, Cx z) {
  return dilatation(spec, z) * eval_h_prime(spec, z);
}

Cx eval_f(const MappingSpec& spec, Cx z) {
  return eval_h(spec, z) + std::conj(eval_g(spec, z));
}

}  // namespace harmconv
