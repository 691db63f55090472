#pragma once

// Constants shared by the scalar and SIMD Fresnel kernels. Anything that
// changes here changes both variants in lockstep.

#include <array>
#include <cstddef>

namespace clothoid::kernels::detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kHalfPi = 1.570796326794896619231321691639751442;

inline constexpr std::size_t kSeriesTerms = 18;

// C(x) = x * sum_n kSeriesC[n] * x^(4n),  S(x) = x^3 * sum_n kSeriesS[n] * x^(4n)
inline constexpr std::array<double, kSeriesTerms> make_series(bool sine) {
  std::array<double, kSeriesTerms> out{};
  const long double half_pi = 1.570796326794896619231321691639751442L;
  for (std::size_t n = 0; n < kSeriesTerms; ++n) {
    const std::size_t m = sine ? 2 * n + 1 : 2 * n;
    long double term = 1.0L;
    for (std::size_t j = 1; j <= m; ++j) term *= half_pi / static_cast<long double>(j);
    term /= static_cast<long double>(2 * m + 1);
    out[n] = static_cast<double>((n % 2 == 0) ? term : -term);
  }
  return out;
}

inline constexpr std::array<double, kSeriesTerms> kSeriesC = make_series(false);
inline constexpr std::array<double, kSeriesTerms> kSeriesS = make_series(true);

// Taylor coefficients of sin(a)/a and cos(a) in a^2, valid for |a| <= pi/4.
inline constexpr std::size_t kTrigTerms = 10;

inline constexpr std::array<double, kTrigTerms> make_trig(bool sine) {
  std::array<double, kTrigTerms> out{};
  for (std::size_t n = 0; n < kTrigTerms; ++n) {
    const std::size_t m = sine ? 2 * n + 1 : 2 * n;
    long double term = 1.0L;
    for (std::size_t j = 1; j <= m; ++j) term /= static_cast<long double>(j);
    out[n] = static_cast<double>((n % 2 == 0) ? term : -term);
  }
  return out;
}

inline constexpr std::array<double, kTrigTerms> kSinTaylor = make_trig(true);
inline constexpr std::array<double, kTrigTerms> kCosTaylor = make_trig(false);

// Lentz continued fraction for the complementary error function.
inline constexpr int kCfMaxIterations = 300;
inline constexpr double kCfEps = 1e-15;
inline constexpr double kCfTiny = 1e-30;

}  // namespace clothoid::kernels::detail
