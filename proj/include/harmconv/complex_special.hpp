#pragma once

#include "harmconv/error.hpp"

namespace harmconv {

// Principal logarithm, arg in (-pi, pi]. Throws DomainError at 0.
Cx log_principal(Cx z);

// Dilogarithm Li2(z) = sum_{k>=1} z^k / k^2 on the closed unit disk.
//
// |z| <= 1/2 sums the defining series. Otherwise, for Re z <= 1/2 the
// Bernoulli expansion in u = -log(1 - z) is used (|u| <= pi/3 there), and for
// Re z > 1/2 the reflection Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z) maps
// the argument into that region. Arguments with |z| > 1 + 1e-12 throw
// DomainError; those within the slack are pulled back onto the circle.
Cx li2(Cx z);

// z^n for n >= 0 by repeated squaring.
inline Cx ipow(Cx z, int n) {
  Cx result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

// (atanh(w) - w) for |w| < 1, accurate for small w.
Cx atanh_minus_identity(Cx w);

// log(1 + d) - d + d^2/2, accurate for small d. DomainError at d = -1.
Cx log1p_remainder(Cx d);

}  // namespace harmconv
