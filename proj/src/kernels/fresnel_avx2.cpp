// AVX2 variants of the Fresnel kernels. Every operation mirrors the scalar
// reference in fresnel_scalar.cpp in the same order; keep them in sync.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cstddef>

#include "kernels/fresnel_common.hpp"
#include "kernels/kernel_impl.hpp"

namespace clothoid::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

struct Cplx4 {
  __m256d re;
  __m256d im;
};

inline __m256d sign_mask() { return _mm256_set1_pd(-0.0); }

inline Cplx4 mul(Cplx4 a, Cplx4 b) {
  return {_mm256_sub_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im)),
          _mm256_add_pd(_mm256_mul_pd(a.re, b.im), _mm256_mul_pd(a.im, b.re))};
}

inline Cplx4 recip(Cplx4 z) {
  const __m256d den = _mm256_add_pd(_mm256_mul_pd(z.re, z.re), _mm256_mul_pd(z.im, z.im));
  return {_mm256_div_pd(z.re, den),
          _mm256_div_pd(_mm256_xor_pd(z.im, sign_mask()), den)};
}

template <std::size_t N>
inline __m256d horner(const std::array<double, N>& coef, __m256d y) {
  __m256d acc = _mm256_set1_pd(coef[N - 1]);
  for (std::size_t i = N - 1; i-- > 0;) {
    acc = _mm256_add_pd(_mm256_mul_pd(acc, y), _mm256_set1_pd(coef[i]));
  }
  return acc;
}

inline __m256d eq(__m256d a, double b) { return _mm256_cmp_pd(a, _mm256_set1_pd(b), _CMP_EQ_OQ); }

inline void sincos_half_pi_sq4(__m256d x, __m256d& cos_out, __m256d& sin_out) {
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d quarter = _mm256_set1_pd(0.25);

  const __m256d hi = _mm256_mul_pd(x, x);
  const __m256d lo = _mm256_fmsub_pd(x, x, hi);
  const __m256d reduced = _mm256_sub_pd(hi, _mm256_mul_pd(four, _mm256_floor_pd(_mm256_mul_pd(hi, quarter))));
  const __m256d r = _mm256_add_pd(reduced, lo);
  const __m256d q = _mm256_round_pd(r, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d a = _mm256_mul_pd(_mm256_sub_pd(r, q), _mm256_set1_pd(kHalfPi));
  const __m256d a2 = _mm256_mul_pd(a, a);
  const __m256d sin_a = _mm256_mul_pd(a, horner(kSinTaylor, a2));
  const __m256d cos_a = horner(kCosTaylor, a2);

  const __m256d quadrant = _mm256_sub_pd(q, _mm256_mul_pd(four, _mm256_floor_pd(_mm256_mul_pd(q, quarter))));
  const __m256d is1 = eq(quadrant, 1.0);
  const __m256d is2 = eq(quadrant, 2.0);
  const __m256d is3 = eq(quadrant, 3.0);
  const __m256d odd = _mm256_or_pd(is1, is3);

  __m256d cc = _mm256_blendv_pd(cos_a, sin_a, odd);
  __m256d ss = _mm256_blendv_pd(sin_a, cos_a, odd);
  cc = _mm256_xor_pd(cc, _mm256_and_pd(_mm256_or_pd(is1, is2), sign_mask()));
  ss = _mm256_xor_pd(ss, _mm256_and_pd(_mm256_or_pd(is2, is3), sign_mask()));
  cos_out = cc;
  sin_out = ss;
}

inline void fresnel_series4(__m256d ax, __m256d& c, __m256d& s) {
  const __m256d x2 = _mm256_mul_pd(ax, ax);
  const __m256d y = _mm256_mul_pd(x2, x2);
  c = _mm256_mul_pd(ax, horner(kSeriesC, y));
  s = _mm256_mul_pd(_mm256_mul_pd(ax, x2), horner(kSeriesS, y));
}

// Lanes flagged inactive on entry are computed but never drive the loop.
inline void fresnel_continued_fraction4(__m256d ax, __m256d active, __m256d& c, __m256d& s) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d pix2 = _mm256_mul_pd(_mm256_set1_pd(kPi), _mm256_mul_pd(ax, ax));
  Cplx4 b{one, _mm256_xor_pd(pix2, sign_mask())};
  Cplx4 cc{_mm256_set1_pd(1.0 / kCfTiny), _mm256_setzero_pd()};
  Cplx4 d = recip(b);
  Cplx4 h = d;
  double n = -1.0;
  for (int k = 2; k <= kCfMaxIterations; ++k) {
    n += 2.0;
    const __m256d a = _mm256_set1_pd(-n * (n + 1.0));
    b.re = _mm256_add_pd(b.re, _mm256_set1_pd(4.0));
    d = recip(Cplx4{_mm256_add_pd(_mm256_mul_pd(a, d.re), b.re),
                    _mm256_add_pd(_mm256_mul_pd(a, d.im), b.im)});
    const Cplx4 inv = recip(cc);
    cc = Cplx4{_mm256_add_pd(b.re, _mm256_mul_pd(a, inv.re)),
               _mm256_add_pd(b.im, _mm256_mul_pd(a, inv.im))};
    const Cplx4 del = mul(cc, d);
    const Cplx4 next = mul(h, del);
    h.re = _mm256_blendv_pd(h.re, next.re, active);
    h.im = _mm256_blendv_pd(h.im, next.im, active);
    const __m256d dev = _mm256_add_pd(
        _mm256_andnot_pd(sign_mask(), _mm256_sub_pd(del.re, one)),
        _mm256_andnot_pd(sign_mask(), del.im));
    const __m256d converged = _mm256_cmp_pd(dev, _mm256_set1_pd(kCfEps), _CMP_LT_OQ);
    active = _mm256_andnot_pd(converged, active);
    if (_mm256_movemask_pd(active) == 0) break;
  }
  h = mul(Cplx4{ax, _mm256_xor_pd(ax, sign_mask())}, h);
  __m256d cphi;
  __m256d sphi;
  sincos_half_pi_sq4(ax, cphi, sphi);
  const Cplx4 p = mul(Cplx4{cphi, sphi}, h);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one_minus = _mm256_sub_pd(one, p.re);
  c = _mm256_mul_pd(half, _mm256_add_pd(one_minus, p.im));
  s = _mm256_mul_pd(half, _mm256_sub_pd(one_minus, p.im));
}

inline void fresnel4(const double* xp, double* cp, double* sp) {
  const __m256d x = _mm256_loadu_pd(xp);
  const __m256d ax = _mm256_andnot_pd(sign_mask(), x);
  const __m256d crossover = _mm256_set1_pd(kFresnelSeriesCrossover);
  const __m256d use_series = _mm256_cmp_pd(ax, crossover, _CMP_LT_OQ);
  const int series_bits = _mm256_movemask_pd(use_series);

  __m256d c_series = _mm256_setzero_pd();
  __m256d s_series = _mm256_setzero_pd();
  __m256d c_cf = _mm256_setzero_pd();
  __m256d s_cf = _mm256_setzero_pd();
  if (series_bits != 0) fresnel_series4(_mm256_min_pd(ax, crossover), c_series, s_series);
  if (series_bits != 0xF) {
    const __m256d cf_active = _mm256_xor_pd(use_series, _mm256_castsi256_pd(_mm256_set1_epi64x(-1)));
    fresnel_continued_fraction4(_mm256_max_pd(ax, crossover), cf_active, c_cf, s_cf);
  }
  const __m256d neg = _mm256_and_pd(x, sign_mask());
  const __m256d c = _mm256_xor_pd(_mm256_blendv_pd(c_cf, c_series, use_series), neg);
  const __m256d s = _mm256_xor_pd(_mm256_blendv_pd(s_cf, s_series, use_series), neg);
  _mm256_storeu_pd(cp, c);
  _mm256_storeu_pd(sp, s);
}

}  // namespace

void fresnel_avx2(const double* x, double* c, double* s, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) fresnel4(x + i, c + i, s + i);
  if (i < n) {
    alignas(32) double xt[kLanes] = {0.0, 0.0, 0.0, 0.0};
    alignas(32) double ct[kLanes];
    alignas(32) double st[kLanes];
    std::copy(x + i, x + n, xt);
    fresnel4(xt, ct, st);
    std::copy(ct, ct + (n - i), c + i);
    std::copy(st, st + (n - i), s + i);
  }
}

void sincos_half_pi_sq_avx2(const double* x, double* cos_out, double* sin_out,
                            std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256d cv;
    __m256d sv;
    sincos_half_pi_sq4(_mm256_loadu_pd(x + i), cv, sv);
    _mm256_storeu_pd(cos_out + i, cv);
    _mm256_storeu_pd(sin_out + i, sv);
  }
  if (i < n) {
    alignas(32) double xt[kLanes] = {0.0, 0.0, 0.0, 0.0};
    alignas(32) double ct[kLanes];
    alignas(32) double st[kLanes];
    std::copy(x + i, x + n, xt);
    __m256d cv;
    __m256d sv;
    sincos_half_pi_sq4(_mm256_load_pd(xt), cv, sv);
    _mm256_store_pd(ct, cv);
    _mm256_store_pd(st, sv);
    std::copy(ct, ct + (n - i), cos_out + i);
    std::copy(st, st + (n - i), sin_out + i);
  }
}

}  // namespace clothoid::kernels::detail
