#include <cmath>
#include <cstddef>

#include "kernels/fresnel_common.hpp"
#include "kernels/kernel_impl.hpp"

namespace clothoid::kernels::detail {

namespace {

struct Cplx {
  double re;
  double im;
};

inline Cplx mul(Cplx a, Cplx b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Cplx recip(Cplx z) {
  const double den = z.re * z.re + z.im * z.im;
  return {z.re / den, -z.im / den};
}

template <std::size_t N>
inline double horner(const std::array<double, N>& coef, double y) {
  double acc = coef[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * y + coef[i];
  return acc;
}

// (cos, sin) of pi/2 * x^2. x^2 is split exactly into hi + lo, hi is reduced
// mod 4 exactly, so no precision is lost for large |x|.
inline void sincos_half_pi_sq_point(double x, double& cos_out, double& sin_out) {
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  const double r = (hi - 4.0 * std::floor(hi * 0.25)) + lo;
  const double q = std::nearbyint(r);
  const double a = (r - q) * kHalfPi;
  const double a2 = a * a;
  const double sin_a = a * horner(kSinTaylor, a2);
  const double cos_a = horner(kCosTaylor, a2);

  const double quadrant = q - 4.0 * std::floor(q * 0.25);
  const bool odd = quadrant == 1.0 || quadrant == 3.0;
  double cc = odd ? sin_a : cos_a;
  double ss = odd ? cos_a : sin_a;
  if (quadrant == 1.0 || quadrant == 2.0) cc = -cc;
  if (quadrant == 2.0 || quadrant == 3.0) ss = -ss;
  cos_out = cc;
  sin_out = ss;
}

inline void fresnel_series(double ax, double& c, double& s) {
  const double x2 = ax * ax;
  const double y = x2 * x2;
  c = ax * horner(kSeriesC, y);
  s = (ax * x2) * horner(kSeriesS, y);
}

// Numerical Recipes style continued fraction for erfc on the ray
// z = sqrt(pi)/2 (1 - i) x, valid for x away from 0.
inline void fresnel_continued_fraction(double ax, double& c, double& s) {
  const double pix2 = kPi * (ax * ax);
  Cplx b{1.0, -pix2};
  Cplx cc{1.0 / kCfTiny, 0.0};
  Cplx d = recip(b);
  Cplx h = d;
  double n = -1.0;
  for (int k = 2; k <= kCfMaxIterations; ++k) {
    n += 2.0;
    const double a = -n * (n + 1.0);
    b.re += 4.0;
    d = recip(Cplx{a * d.re + b.re, a * d.im + b.im});
    const Cplx a_over_cc = [&] {
      const Cplx inv = recip(cc);
      return Cplx{a * inv.re, a * inv.im};
    }();
    cc = Cplx{b.re + a_over_cc.re, b.im + a_over_cc.im};
    const Cplx del = mul(cc, d);
    h = mul(h, del);
    if (std::fabs(del.re - 1.0) + std::fabs(del.im) < kCfEps) break;
  }
  h = mul(Cplx{ax, -ax}, h);
  double cphi = 0.0;
  double sphi = 0.0;
  sincos_half_pi_sq_point(ax, cphi, sphi);
  const Cplx p = mul(Cplx{cphi, sphi}, h);
  c = 0.5 * ((1.0 - p.re) + p.im);
  s = 0.5 * ((1.0 - p.re) - p.im);
}

}  // namespace

void fresnel_scalar(const double* x, double* c, double* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = std::fabs(x[i]);
    double cv = 0.0;
    double sv = 0.0;
    if (ax < kFresnelSeriesCrossover) {
      fresnel_series(ax, cv, sv);
    } else {
      fresnel_continued_fraction(ax, cv, sv);
    }
    if (std::signbit(x[i])) {
      cv = -cv;
      sv = -sv;
    }
    c[i] = cv;
    s[i] = sv;
  }
}

void sincos_half_pi_sq_scalar(const double* x, double* cos_out, double* sin_out,
                              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) sincos_half_pi_sq_point(x[i], cos_out[i], sin_out[i]);
}

}  // namespace clothoid::kernels::detail
