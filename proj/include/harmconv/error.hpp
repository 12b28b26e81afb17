#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace harmconv {

using Cx = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a special function (log 0, |z| > 1 for Li2).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid family parameters or mismatched operands.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Evaluation too close to a singular point of a closed form.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, Cx singular_point)
      : Error(what), singular_point_(singular_point) {}
  Cx singular_point() const noexcept { return singular_point_; }

 private:
  Cx singular_point_;
};

// (h*h_r)'(z) vanished: the dilatation has a pole there.
class CriticalPointError : public Error {
 public:
  CriticalPointError(const std::string& what, Cx z) : Error(what), z_(z) {}
  Cx where() const noexcept { return z_; }

 private:
  Cx z_;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

// Formal power series division by a series with zero constant term,
// or a shear with omega(0) = -1.
class SeriesError : public Error {
 public:
  using Error::Error;
};

// Schur-Cohn step cannot proceed: |a_d| <= |a_0| for a single reduction,
// or a zero on (or numerically on) the unit circle for the full count.
class CohnError : public Error {
 public:
  enum class Kind { ReductionInapplicable, BoundaryDegenerate };
  CohnError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace harmconv
