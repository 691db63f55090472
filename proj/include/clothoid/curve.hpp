#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "clothoid/quadrature.hpp"
#include "clothoid/riccati.hpp"
#include "clothoid/scheffers.hpp"

namespace clothoid {

/// Complex curve position. The real part is the clothoid helix, the
/// imaginary part a planar clothoid spiral (z == 0 for cases 1 and 2).
struct ComplexTriple {
  cplx x;
  cplx y;
  cplx z;
};

struct CurveSample {
  double s;
  ComplexTriple position;
};

/// Samples ordered by strictly increasing s, all for the same params and case.
struct Curve {
  HelixParams params;
  FCase which = FCase::one;
  std::vector<CurveSample> samples;
};

enum class Bisectrix { first, second, neither };

/// Limit points of the real (x, y) projection as s -> +inf and s -> -inf.
struct Foci {
  Eigen::Vector2d plus;
  Eigen::Vector2d minus;
  Bisectrix bisectrix = Bisectrix::neither;
};

/// Where the shifted closed forms put the origin. With `at_shift`, x and y
/// are integrated from s + delta = 0 and z from s = 0; `zero_at_s0`
/// subtracts the resulting offset so every coordinate vanishes at s = 0.
/// Unshifted curves pass through the origin at s = 0 either way.
enum class Origin { at_shift, zero_at_s0 };

/// Closed-form position for cases 1 and 2. Throws DegenerateError for k == 0,
/// UnsupportedParameters for other cases or invalid shifts.
ComplexTriple position_closed_form(FCase which, double s, const HelixParams& p,
                                   Origin origin = Origin::at_shift);

/// The shifted (k == 1) closed forms evaluated for any delta, including 0.
ComplexTriple position_closed_form_shifted(FCase which, double s, double c, double delta,
                                           Origin origin = Origin::at_shift);

/// Position of the `at_shift` closed form at s = 0; zero unless shifted.
ComplexTriple closed_form_origin_offset(FCase which, const HelixParams& p);

struct QuadraturePosition {
  ComplexTriple value;
  double error_estimate = 0.0;
  bool converged = false;
};

/// int_0^s alpha(sigma) d sigma with alpha from the Scheffers map of f_set.
/// Any case 1..4. Never throws on non-convergence; inspect `converged`.
QuadraturePosition position_quadrature_detailed(FCase which, double s, const HelixParams& p,
                                                quad::Options opts = {});

/// Same, throwing QuadratureError with the achieved estimate on non-convergence.
ComplexTriple position_quadrature(FCase which, double s, const HelixParams& p,
                                  quad::Options opts = {});

struct SampleOptions {
  /// Closed grid s_min + i (s_max - s_min)/(n-1); otherwise half-open with step (s_max - s_min)/n.
  bool include_end = true;
  Origin origin = Origin::at_shift;
};

/// n >= 2 uniform samples. Cases 1/2 use the batched closed form, 3/4 quadrature.
Curve sample_curve(FCase which, const HelixParams& p, double s_min, double s_max, std::size_t n,
                   SampleOptions opts = {});

Foci foci(FCase which, const HelixParams& p);

/// delta_n = 2^{1/4} c sqrt((2n+1) pi / 2), n = 0..n_max (positive branch).
std::vector<double> delta_sequence(int n_max, double c);

/// (real part, imaginary part).
std::pair<Eigen::Vector3d, Eigen::Vector3d> split_parts(const ComplexTriple& t);

/// Argument of the normalized Fresnel integrals at s: (k^2+1)^{1/4} s / (sqrt(pi) c),
/// or 2^{1/4} (s + delta) / (sqrt(pi) c) when shifted.
double fresnel_argument(double s, const HelixParams& p);

/// Common prefactor of the real x, y coordinates: sqrt(pi) c k / (k^2+1)^{1/4},
/// or sqrt(pi) c / 2^{1/4} when shifted.
double real_prefactor(const HelixParams& p);

}  // namespace clothoid
