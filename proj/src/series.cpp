#include "harmconv/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace harmconv {

TruncatedSeries::TruncatedSeries(std::vector<Cx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ParameterError("TruncatedSeries: needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::geometric(int order, Cx scale) {
  TruncatedSeries s(order);
  for (int k = 1; k <= order; ++k) s[k] = scale;
  return s;
}

SeriesPair taylor_of_mapping(const MappingSpec& spec, int order) {
  if (order < 1) throw ParameterError("taylor_of_mapping: order must be >= 1");
  TruncatedSeries h(order), g(order);
  switch (spec.family()) {
    case Family::F0:
      for (int k = 1; k <= order; ++k) {
        h[k] = (k + 1) / 2.0;
        g[k] = -(k - 1) / 2.0;
      }
      break;

    case Family::Fa: {
      // (1+a)/2 * z/(1-z) +- (1-a)/4 * log((1+z)/(1-z)); the log has odd terms 2/k.
      const double a = spec.a();
      for (int k = 1; k <= order; ++k) {
        const double log_part = (k % 2 == 1) ? (1.0 - a) / (2.0 * k) : 0.0;
        h[k] = (1.0 + a) / 2.0 + log_part;
        g[k] = (1.0 + a) / 2.0 - log_part;
      }
      break;
    }

    case Family::F1:
    case Family::Fn: {
      // h'(z) = sum_m z^m sum_{j : nj <= m} (-e)^j (m - nj + 1).
      const int n = spec.dilatation_power();
      const double step = spec.theta_is_pi() ? 0.0 : reduce_angle(spec.theta() + std::numbers::pi);
      const int max_j = (order - 1) / n;
      std::vector<Cx> powers(std::size_t(max_j) + 1);
      for (int j = 0; j <= max_j; ++j) powers[std::size_t(j)] = std::polar(1.0, j * step);
      for (int k = 1; k <= order; ++k) {
        const int m = k - 1;
        Cx hp = 0.0;
        for (int j = 0; n * j <= m; ++j) hp += powers[std::size_t(j)] * double(m - n * j + 1);
        h[k] = hp / double(k);
        g[k] = 1.0 - h[k];
      }
      break;
    }
  }
  return {std::move(h), std::move(g)};
}

TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.order() != t.order()) throw ParameterError("hadamard: truncation orders differ");
  TruncatedSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out[k] = s[k] * t[k];
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int order = std::min(s.order(), t.order());
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) out[i + j] += s[i] * t[j];
  return out;
}

TruncatedSeries series_div(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (t[0] == Cx(0.0)) throw SeriesError("series_div: divisor has zero constant term");
  const int order = std::min(s.order(), t.order());
  TruncatedSeries q(order);
  for (int k = 0; k <= order; ++k) {
    Cx acc = s[k];
    for (int j = 1; j <= k; ++j) acc -= t[j] * q[k - j];
    q[k] = acc / t[0];
  }
  return q;
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
  if (s.order() < 1) return TruncatedSeries(0);
  TruncatedSeries d(s.order() - 1);
  for (int k = 1; k <= s.order(); ++k) d[k - 1] = double(k) * s[k];
  return d;
}

TruncatedSeries series_integral(const TruncatedSeries& s) {
  TruncatedSeries out(s.order() + 1);
  for (int k = 0; k <= s.order(); ++k) out[k + 1] = s[k] / double(k + 1);
  return out;
}

TruncatedSeries truncate(const TruncatedSeries& s, int order) {
  TruncatedSeries out(order);
  for (int k = 0; k <= std::min(order, s.order()); ++k) out[k] = s[k];
  return out;
}

Cx series_eval(const TruncatedSeries& s, Cx z) {
  Cx acc = 0.0;
  for (int k = s.order(); k >= 0; --k) acc = acc * z + s[k];
  return acc;
}

SeriesPair shear_series(const TruncatedSeries& phi, const TruncatedSeries& omega) {
  if (phi.order() != omega.order()) throw ParameterError("shear_series: orders differ");
  if (phi[0] != Cx(0.0)) throw ParameterError("shear_series: phi(0) must vanish");
  if (std::abs(1.0 + omega[0]) < 1e-14)
    throw SeriesError("shear_series: omega(0) = -1, 1 + omega is not invertible");
  const int order = phi.order();
  const TruncatedSeries dphi = series_derivative(phi);
  const TruncatedSeries w = truncate(omega, order - 1);
  TruncatedSeries one_plus_w = w;
  one_plus_w[0] += 1.0;
  const TruncatedSeries dh = series_div(dphi, one_plus_w);
  // g' = phi' - h' keeps h + g = phi coefficientwise; equals omega h' to truncation.
  TruncatedSeries dg(order - 1);
  for (int k = 0; k < order; ++k) dg[k] = dphi[k] - dh[k];
  return {series_integral(dh), series_integral(dg)};
}

}  // namespace harmconv

namespace harmconv {

SeriesPair conv_series(const ConvolutionSpec& spec, int order) {
  const SeriesPair left = taylor_of_mapping(spec.left(), order);
  const SeriesPair right = taylor_of_mapping(spec.right(), order);
  return {hadamard(left.h, right.h), hadamard(left.g, right.g)};
}

}  // namespace harmconv
