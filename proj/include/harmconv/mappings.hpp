#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmconv/error.hpp"

namespace harmconv {

enum class Family {
  F0,  // canonical right half-plane map, dilatation -z
  Fa,  // h + g = (1+a) z/(1-z), dilatation (z+a)/(1+az)
  F1,  // h + g = z/(1-z), dilatation e^{i theta} z, theta != pi
  Fn,  // h + g = z/(1-z), dilatation e^{i theta} z^n
};

std::string to_string(Family family);

// coef * log(1 - unit * z), |unit| = 1.
struct LogTerm {
  Cx coef;
  Cx unit;
};

// An analytic part written as
//   geometric * z/(1-z) + quadratic * z(2-z)/(1-z)^2 + sum_j coef_j log(1 - unit_j z).
// Every closed form of h and g in this library has this shape.
// coef * [log(1 + d) - d + d^2/2] with d = step * z/(1-z). This is what is left of
// coef * log(1 - (1 - step) z) after its log(1-z), z/(1-z) and z^2/(1-z)^2 parts are
// moved into the other terms; used when a log singularity sits close to z = 1.
struct FoldedLog {
  Cx coef;
  Cx step;
};

struct LogRationalForm {
  Cx geometric{0.0};
  Cx quadratic{0.0};
  std::vector<LogTerm> logs;
  std::optional<FoldedLog> folded;

  Cx operator()(Cx z) const;
  // (F(z) - F(-z)) / z, with the removable singularity at 0 filled in.
  Cx odd_quotient(Cx z) const;
};

// Validated, immutable descriptor of a mapping family with its closed forms.
class MappingSpec {
 public:
  Family family() const noexcept { return family_; }
  double a() const noexcept { return a_; }
  // Reduced to (-pi, pi].
  double theta() const noexcept { return theta_; }
  int n() const noexcept { return n_; }
  // True for Fn with theta = pi, which uses the root-of-unity closed form.
  bool theta_is_pi() const noexcept { return theta_is_pi_; }

  // e^{i theta}; -1 for F0.
  Cx rotation() const noexcept { return rotation_; }
  // Power of z in the dilatation e^{i theta} z^n (1 for F0/F1; unused for Fa).
  int dilatation_power() const noexcept { return power_; }

  const LogRationalForm& h_form() const noexcept { return h_form_; }
  const LogRationalForm& g_form() const noexcept { return g_form_; }
  // Coefficient c of h + g = c z/(1-z).
  double shear_scale() const noexcept { return shear_scale_; }

  // Points on the unit circle where h, g or their derivatives blow up.
  const std::vector<Cx>& singularities() const noexcept { return singular_; }

  std::string describe() const;

 private:
  friend MappingSpec make_mapping(Family, std::optional<double>, std::optional<double>,
                                  std::optional<int>);
  MappingSpec() = default;

  Family family_ = Family::F0;
  double a_ = 0.0;
  double theta_ = 0.0;
  int n_ = 1;
  bool theta_is_pi_ = false;
  Cx rotation_{-1.0, 0.0};
  int power_ = 1;
  double shear_scale_ = 1.0;
  LogRationalForm h_form_;
  LogRationalForm g_form_;
  std::vector<Cx> singular_;
};

// Throws ParameterError when a family invariant is violated.
MappingSpec make_mapping(Family family, std::optional<double> a = std::nullopt,
                         std::optional<double> theta = std::nullopt,
                         std::optional<int> n = std::nullopt);

inline MappingSpec make_f0() { return make_mapping(Family::F0); }
inline MappingSpec make_fa(double a) { return make_mapping(Family::Fa, a); }
inline MappingSpec make_f1(double theta) { return make_mapping(Family::F1, std::nullopt, theta); }
inline MappingSpec make_fn(int n, double theta) {
  return make_mapping(Family::Fn, std::nullopt, theta, n);
}

// Distance below which evaluation at a singular point is refused.
inline constexpr double kSingularGuard = 1e-9;

// Throws DomainError for |z| >= 1 and SingularityError within the guard.
void check_evaluable(const MappingSpec& spec, Cx z);

Cx eval_h(const MappingSpec& spec, Cx z);
Cx eval_g(const MappingSpec& spec, Cx z);
Cx eval_h_prime(const MappingSpec& spec, Cx z);
Cx eval_g_prime(const MappingSpec& spec, Cx z);
Cx eval_f(const MappingSpec& spec, Cx z);
Cx dilatation(const MappingSpec& spec, Cx z);

// Reduce an angle to (-pi, pi].
double reduce_angle(double theta);

}  // namespace harmconv
