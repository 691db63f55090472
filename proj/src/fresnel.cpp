#include "clothoid/fresnel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "clothoid/errors.hpp"
#include "clothoid/kernels.hpp"

namespace clothoid {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be finite, got " + std::to_string(x));
  }
}

void require_positive_scale(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("fresnel_scaled: scale a must be finite and > 0, got " + std::to_string(a));
  }
}

}  // namespace

FresnelPair fresnel(double x) {
  require_finite(x, "fresnel argument");
  FresnelPair out;
  kernels::fresnel_kernel(kernels::Isa::scalar)(&x, &out.c_val, &out.s_val, 1);
  return out;
}

FresnelPair fresnel_scaled(double s, double a) {
  require_positive_scale(a);
  require_finite(s, "fresnel_scaled argument");
  const double to_unit = std::sqrt(2.0 * a / kPi);
  const double back = std::sqrt(kPi / (2.0 * a));
  const FresnelPair unit = fresnel(s * to_unit);
  return {back * unit.c_val, back * unit.s_val};
}

void fresnel_batch(std::span<const double> x, std::span<double> c_out,
                   std::span<double> s_out) {
  if (c_out.size() != x.size() || s_out.size() != x.size()) {
    throw DomainError("fresnel_batch: output spans must match input length");
  }
  for (double v : x) require_finite(v, "fresnel argument");
  kernels::fresnel_kernel(kernels::active_isa())(x.data(), c_out.data(), s_out.data(), x.size());
}

void fresnel_scaled_batch(std::span<const double> s, double a,
                          std::span<double> c_out, std::span<double> s_out) {
  require_positive_scale(a);
  const double to_unit = std::sqrt(2.0 * a / kPi);
  const double back = std::sqrt(kPi / (2.0 * a));
  std::vector<double> args(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    require_finite(s[i], "fresnel_scaled argument");
    args[i] = s[i] * to_unit;
  }
  fresnel_batch(args, c_out, s_out);
  for (std::size_t i = 0; i < s.size(); ++i) {
    c_out[i] *= back;
    s_out[i] *= back;
  }
}

}  // namespace clothoid
