#pragma once

#include <utility>
#include <vector>

#include "harmconv/convolution.hpp"
#include "harmconv/error.hpp"
#include "harmconv/mappings.hpp"

namespace harmconv {

// Taylor coefficients c_0..c_N of an analytic function on the disk.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(std::size_t(order) + 1, Cx(0.0)) {}
  explicit TruncatedSeries(std::vector<Cx> coeffs);

  int order() const noexcept { return int(coeffs_.size()) - 1; }
  const std::vector<Cx>& coeffs() const noexcept { return coeffs_; }
  Cx& operator[](int k) { return coeffs_[std::size_t(k)]; }
  Cx operator[](int k) const { return coeffs_[std::size_t(k)]; }

  // Coefficients of z/(1-z) (zero constant, ones after).
  static TruncatedSeries geometric(int order, Cx scale = 1.0);

 private:
  std::vector<Cx> coeffs_;
};

struct SeriesPair {
  TruncatedSeries h;
  TruncatedSeries g;
};

// Exact expansions: closed-form coefficients for F0 and Fa; for F1/Fn the
// product of geometric series 1/(1-z)^2 * 1/(1 + e^{i theta} z^n) integrated
// termwise. Neither route evaluates the log/partial-fraction closed forms.
SeriesPair taylor_of_mapping(const MappingSpec& spec, int order);

TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);
// Formal quotient s/t truncated at min order; needs t_0 != 0.
TruncatedSeries series_div(const TruncatedSeries& s, const TruncatedSeries& t);
// Termwise derivative; the result has order N-1.
TruncatedSeries series_derivative(const TruncatedSeries& s);
// Antiderivative with zero constant; the result has order N+1.
TruncatedSeries series_integral(const TruncatedSeries& s);
TruncatedSeries truncate(const TruncatedSeries& s, int order);
Cx series_eval(const TruncatedSeries& s, Cx z);

// Shearing: h' = phi'/(1+omega), g' = omega h', integrated with zero constant.
// phi and omega must share the same order; phi_0 must vanish.
SeriesPair shear_series(const TruncatedSeries& phi, const TruncatedSeries& omega);

// Coefficientwise products (h*h_r, g*g_r) of the two factors' Taylor series.
SeriesPair conv_series(const ConvolutionSpec& spec, int order);

// Dilatation of the truncated convolution: (g*g_r)'/(h*h_r)' summed termwise.
// Independent of every closed form; used as the oracle for conv_dilatation.
struct SeriesDilatation {
  TruncatedSeries hp;
  TruncatedSeries gp;
  explicit SeriesDilatation(const SeriesPair& conv)
      : hp(series_derivative(conv.h)), gp(series_derivative(conv.g)) {}
  Cx operator()(Cx z) const { return series_eval(gp, z) / series_eval(hp, z); }
};

}  // namespace harmconv
