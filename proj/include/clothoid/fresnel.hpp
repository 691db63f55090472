#pragma once

#include <span>

namespace clothoid {

/// Normalized Fresnel integrals
///   C(x) = int_0^x cos(pi t^2 / 2) dt,   S(x) = int_0^x sin(pi t^2 / 2) dt,
/// with C(+-inf) = S(+-inf) = +-1/2.
struct FresnelPair {
  double c_val = 0.0;
  double s_val = 0.0;
};

/// Absolute error below 1e-12 for every finite x. Throws DomainError on NaN/inf.
FresnelPair fresnel(double x);

/// (int_0^s cos(a t^2) dt, int_0^s sin(a t^2) dt) for a > 0.
FresnelPair fresnel_scaled(double s, double a);

/// Vectorized form of fresnel(); uses the widest kernel the CPU supports.
/// All spans must have the same length.
void fresnel_batch(std::span<const double> x, std::span<double> c_out,
                   std::span<double> s_out);

/// Vectorized form of fresnel_scaled().
void fresnel_scaled_batch(std::span<const double> s, double a,
                          std::span<double> c_out, std::span<double> s_out);

}  // namespace clothoid
