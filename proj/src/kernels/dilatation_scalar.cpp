#include <cmath>

#include "harmconv/complex_special.hpp"
#include "harmconv/kernels.hpp"

namespace harmconv::kernels {

DerivativeParams make_params(const ConvolutionSpec& spec) {
  const MappingSpec& r = spec.right();
  DerivativeParams p;
  p.a = spec.a();
  p.rotation = r.rotation();
  p.power = r.dilatation_power();
  p.geometric = r.h_form().geometric;
  p.quadratic = r.h_form().quadratic;
  for (const LogTerm& t : r.h_form().logs) {
    p.coef_re.push_back(t.coef.real());
    p.coef_im.push_back(t.coef.imag());
    p.unit_re.push_back(t.unit.real());
    p.unit_im.push_back(t.unit.imag());
    p.log_limit += t.coef * t.unit;
  }
  p.folded = r.h_form().folded;
  return p;
}

void derivatives_scalar(const DerivativeParams& params, PointsIn in, DerivativesOut out) {
  const std::size_t count = in.re.size();
  const double a = params.a;
  const std::size_t terms = params.coef_re.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Cx z(in.re[i], in.im[i]);
    const Cx q = 1.0 - z * z;
    Cx log_sum = 0.0;
    if (z == Cx(0.0)) {
      log_sum = params.log_limit;
    } else {
      for (std::size_t j = 0; j < terms; ++j) {
        const Cx c(params.coef_re[j], params.coef_im[j]);
        const Cx u(params.unit_re[j], params.unit_im[j]);
        log_sum += c * std::atanh(u * z);
      }
      log_sum /= z;
    }
    Cx odd_h = 2.0 * params.geometric / q + 4.0 * params.quadratic / (q * q) - 2.0 * log_sum;
    if (params.folded && z != Cx(0.0)) {
      const FoldedLog& f = *params.folded;
      odd_h += f.coef * (log1p_remainder(f.step * z / (1.0 - z)) - log1p_remainder(-f.step * z / (1.0 + z))) / z;
    }
    const Cx odd_g = 2.0 / q - odd_h;
    const Cx w = 1.0 - z;
    const Cx omega = params.rotation * ipow(z, params.power);
    const Cx hp = 1.0 / ((1.0 + omega) * w * w);
    const Cx gp = omega * hp;
    const Cx H = (1.0 - a) / 4.0 * odd_h + (1.0 + a) / 2.0 * hp;
    const Cx G = -(1.0 - a) / 4.0 * odd_g + (1.0 + a) / 2.0 * gp;
    out.hp_re[i] = H.real();
    out.hp_im[i] = H.imag();
    out.gp_re[i] = G.real();
    out.gp_im[i] = G.imag();
  }
}

}  // namespace harmconv::kernels
