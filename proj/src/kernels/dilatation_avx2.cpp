// AVX2/FMA variant of the batch derivative kernel. Compiled with -mavx2 -mfma;
// only called after avx2_available() says the CPU supports both.

#include <immintrin.h>

#include <array>
#include <cstdint>
#include <numbers>

#include "harmconv/kernels.hpp"

namespace harmconv::kernels {
namespace {

struct Vc {
  __m256d re;
  __m256d im;
};

inline __m256d splat(double x) { return _mm256_set1_pd(x); }

inline Vc add(Vc a, Vc b) { return {_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im)}; }
inline Vc sub(Vc a, Vc b) { return {_mm256_sub_pd(a.re, b.re), _mm256_sub_pd(a.im, b.im)}; }

inline Vc mul(Vc a, Vc b) {
  return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
          _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

inline Vc mul(Vc a, Cx b) {
  const __m256d br = splat(b.real()), bi = splat(b.imag());
  return {_mm256_fmsub_pd(a.re, br, _mm256_mul_pd(a.im, bi)),
          _mm256_fmadd_pd(a.re, bi, _mm256_mul_pd(a.im, br))};
}

inline Vc scale(Vc a, double s) {
  const __m256d v = splat(s);
  return {_mm256_mul_pd(a.re, v), _mm256_mul_pd(a.im, v)};
}

// a / b with Smith's scaling to keep |b|^2 in range near the boundary.
inline Vc div(Vc a, Vc b) {
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d br_abs = _mm256_and_pd(b.re, abs_mask);
  const __m256d bi_abs = _mm256_and_pd(b.im, abs_mask);
  const __m256d re_major = _mm256_cmp_pd(br_abs, bi_abs, _CMP_GE_OQ);
  // Case |br| >= |bi|: r = bi/br, d = br + bi r.
  const __m256d r1 = _mm256_div_pd(b.im, b.re);
  const __m256d d1 = _mm256_fmadd_pd(b.im, r1, b.re);
  const __m256d x1 = _mm256_div_pd(_mm256_fmadd_pd(a.im, r1, a.re), d1);
  const __m256d y1 = _mm256_div_pd(_mm256_fnmadd_pd(a.re, r1, a.im), d1);
  // Case |bi| > |br|: r = br/bi, d = bi + br r.
  const __m256d r2 = _mm256_div_pd(b.re, b.im);
  const __m256d d2 = _mm256_fmadd_pd(b.re, r2, b.im);
  const __m256d x2 = _mm256_div_pd(_mm256_fmadd_pd(a.re, r2, a.im), d2);
  const __m256d y2 = _mm256_div_pd(_mm256_fmsub_pd(a.im, r2, a.re), d2);
  return {_mm256_blendv_pd(x2, x1, re_major), _mm256_blendv_pd(y2, y1, re_major)};
}

inline Vc recip(Vc b) { return div({splat(1.0), splat(0.0)}, b); }

// Natural log of positive normal doubles: x = m 2^e with m in [sqrt(1/2), sqrt(2)),
// log m = 2 atanh(s), s = (m-1)/(m+1), |s| <= 0.1716.
inline __m256d vlog(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3ff0000000000000LL);
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));
  // Biased exponent as a double via the 2^52 trick.
  const __m256i exp_bits = _mm256_srli_epi64(bits, 52);
  const __m256d two52 = splat(0x1p52);
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(exp_bits, _mm256_castpd_si256(two52))), two52);
  e = _mm256_sub_pd(e, splat(1023.0));
  const __m256d big = _mm256_cmp_pd(m, splat(std::numbers::sqrt2), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, splat(1.0)));

  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, splat(1.0)), _mm256_add_pd(m, splat(1.0)));
  const __m256d s2 = _mm256_mul_pd(s, s);
  __m256d poly = splat(1.0 / 23.0);
  for (int k = 10; k >= 0; --k) poly = _mm256_fmadd_pd(poly, s2, splat(1.0 / (2 * k + 1)));
  const __m256d log_m = _mm256_mul_pd(_mm256_add_pd(s, s), poly);

  constexpr double ln2_hi = 6.93147180369123816490e-01;
  constexpr double ln2_lo = 1.90821492927058770002e-10;
  return _mm256_fmadd_pd(e, splat(ln2_hi), _mm256_fmadd_pd(e, splat(ln2_lo), log_m));
}

// log(1 + t) for t > -1 with the rounding of 1 + t corrected.
inline __m256d vlog1p(__m256d t) {
  const __m256d one = splat(1.0);
  const __m256d x = _mm256_add_pd(one, t);
  const __m256d err = _mm256_sub_pd(t, _mm256_sub_pd(x, one));
  return _mm256_add_pd(vlog(x), _mm256_div_pd(err, x));
}

// atan on the real line: reciprocal reduction to [0, 1], two argument halvings
// atan(x) = 2 atan(x / (1 + sqrt(1 + x^2))) to [0, tan(pi/16)], then Taylor.
inline __m256d vatan(__m256d t) {
  const __m256d sign_mask = splat(-0.0);
  const __m256d sign = _mm256_and_pd(t, sign_mask);
  __m256d x = _mm256_andnot_pd(sign_mask, t);
  const __m256d one = splat(1.0);
  const __m256d inv = _mm256_cmp_pd(x, one, _CMP_GT_OQ);
  x = _mm256_blendv_pd(x, _mm256_div_pd(one, x), inv);
  for (int i = 0; i < 2; ++i)
    x = _mm256_div_pd(x, _mm256_add_pd(one, _mm256_sqrt_pd(_mm256_fmadd_pd(x, x, one))));
  const __m256d x2 = _mm256_mul_pd(x, x);
  __m256d poly = splat(1.0 / 25.0);
  for (int k = 11; k >= 0; --k)
    poly = _mm256_fmadd_pd(poly, x2, splat((k % 2 == 0 ? 1.0 : -1.0) / (2 * k + 1)));
  poly = _mm256_mul_pd(poly, x);
  __m256d r = _mm256_mul_pd(poly, splat(4.0));
  r = _mm256_blendv_pd(r, _mm256_sub_pd(splat(std::numbers::pi / 2), r), inv);
  return _mm256_or_pd(r, sign);
}

// atanh(w) for |w| < 1.
inline Vc vatanh(Vc w) {
  const __m256d one = splat(1.0);
  const __m256d x = w.re, y = w.im;
  // Re atanh is odd in x; evaluating at |x| keeps the log1p argument >= 0,
  // away from the cancellation at -1.
  const __m256d sign_mask = splat(-0.0);
  const __m256d x_sign = _mm256_and_pd(x, sign_mask);
  const __m256d ax = _mm256_andnot_pd(sign_mask, x);
  const __m256d y2 = _mm256_mul_pd(y, y);
  const __m256d omx = _mm256_sub_pd(one, ax);
  const __m256d denom = _mm256_fmadd_pd(omx, omx, y2);
  const __m256d re_abs = _mm256_mul_pd(splat(0.25), vlog1p(_mm256_div_pd(_mm256_mul_pd(splat(4.0), ax), denom)));
  const __m256d re = _mm256_or_pd(re_abs, x_sign);
  const __m256d one_minus_abs2 = _mm256_fnmadd_pd(y, y, _mm256_mul_pd(omx, _mm256_add_pd(one, ax)));
  const __m256d im = _mm256_mul_pd(splat(0.5), vatan(_mm256_div_pd(_mm256_add_pd(y, y), one_minus_abs2)));
  return {re, im};
}

inline Vc vipow(Vc z, int n) {
  Vc result{splat(1.0), splat(0.0)};
  while (n > 0) {
    if (n & 1) result = mul(result, z);
    z = mul(z, z);
    n >>= 1;
  }
  return result;
}

void block(const DerivativeParams& p, const double* zr, const double* zi, double* hr, double* hi,
           double* gr, double* gi) {
  const __m256d one = splat(1.0);
  const Vc z{_mm256_loadu_pd(zr), _mm256_loadu_pd(zi)};
  const __m256d zero_lane = _mm256_and_pd(_mm256_cmp_pd(z.re, splat(0.0), _CMP_EQ_OQ),
                                          _mm256_cmp_pd(z.im, splat(0.0), _CMP_EQ_OQ));
  // Substitute 1 at z = 0 lanes for the division; their result is patched below.
  const Vc z_safe{_mm256_blendv_pd(z.re, one, zero_lane), z.im};

  Vc log_sum{splat(0.0), splat(0.0)};
  for (std::size_t j = 0; j < p.coef_re.size(); ++j) {
    const Cx u(p.unit_re[j], p.unit_im[j]);
    const Cx c(p.coef_re[j], p.coef_im[j]);
    log_sum = add(log_sum, mul(vatanh(mul(z, u)), c));
  }
  log_sum = div(log_sum, z_safe);
  log_sum.re = _mm256_blendv_pd(log_sum.re, splat(p.log_limit.real()), zero_lane);
  log_sum.im = _mm256_blendv_pd(log_sum.im, splat(p.log_limit.imag()), zero_lane);

  const Vc z2 = mul(z, z);
  const Vc q{_mm256_sub_pd(one, z2.re), _mm256_sub_pd(splat(0.0), z2.im)};
  const Vc inv_q = recip(q);
  const Vc inv_q2 = mul(inv_q, inv_q);
  const Vc odd_h = sub(add(mul(inv_q, 2.0 * p.geometric), mul(inv_q2, 4.0 * p.quadratic)),
                       scale(log_sum, 2.0));
  const Vc odd_g = sub(scale(inv_q, 2.0), odd_h);

  const Vc w{_mm256_sub_pd(one, z.re), _mm256_sub_pd(splat(0.0), z.im)};
  const Vc omega = mul(vipow(z, p.power), p.rotation);
  const Vc one_plus_omega{_mm256_add_pd(one, omega.re), omega.im};
  const Vc hp = recip(mul(one_plus_omega, mul(w, w)));
  const Vc gp = mul(omega, hp);

  const double ca = (1.0 - p.a) / 4.0, cb = (1.0 + p.a) / 2.0;
  const Vc H = add(scale(odd_h, ca), scale(hp, cb));
  const Vc G = sub(scale(gp, cb), scale(odd_g, ca));
  _mm256_storeu_pd(hr, H.re);
  _mm256_storeu_pd(hi, H.im);
  _mm256_storeu_pd(gr, G.re);
  _mm256_storeu_pd(gi, G.im);
}

}  // namespace

void derivatives_avx2(const DerivativeParams& params, PointsIn in, DerivativesOut out) {
  if (params.folded) {  // no vector complex log yet
    derivatives_scalar(params, in, out);
    return;
  }
  const std::size_t count = in.re.size();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4)
    block(params, in.re.data() + i, in.im.data() + i, out.hp_re.data() + i,
          out.hp_im.data() + i, out.gp_re.data() + i, out.gp_im.data() + i);
  if (i == count) return;
  // Tail: pad with zeros so every point still goes through the vector path.
  alignas(32) std::array<double, 4> zr{}, zi{}, hr{}, hi{}, gr{}, gi{};
  const std::size_t rest = count - i;
  for (std::size_t k = 0; k < rest; ++k) {
    zr[k] = in.re[i + k];
    zi[k] = in.im[i + k];
  }
  block(params, zr.data(), zi.data(), hr.data(), hi.data(), gr.data(), gi.data());
  for (std::size_t k = 0; k < rest; ++k) {
    out.hp_re[i + k] = hr[k];
    out.hp_im[i + k] = hi[k];
    out.gp_re[i + k] = gr[k];
    out.gp_im[i + k] = gi[k];
  }
}

}  // namespace harmconv::kernels
