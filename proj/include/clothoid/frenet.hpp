#pragma once

#include <Eigen/Core>

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "clothoid/riccati.hpp"
#include "clothoid/scheffers.hpp"

namespace clothoid {

/// Position and Frenet frame of a unit-speed curve. {T, N, B} is a proper
/// orthonormal frame.
struct FrenetState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d T = Eigen::Vector3d::UnitX();
  Eigen::Vector3d N = Eigen::Vector3d::UnitY();
  Eigen::Vector3d B = Eigen::Vector3d::UnitZ();
};

struct FrenetSample {
  double s;
  FrenetState state;
};

/// Largest entry of |[T N B]^T [T N B] - I|.
double orthonormality_defect(const FrenetState& f);

/// RK4 on r' = T, T' = kappa N, N' = -kappa T + tau B, B' = -tau N, followed
/// by modified Gram-Schmidt (T, then N, then B) after every step. Integrates
/// from s0 to s1 in either direction; the last step is shortened to land on s1.
///
/// Per-step re-orthonormalization keeps the frame on SO(3) to rounding level.
/// A Lie-group (exponential map / Magnus) step would preserve it exactly and
/// can replace `step_rk4` without touching callers.
std::vector<FrenetSample> frenet_integrate(const CurvatureTorsionProfile& profile,
                                           const FrenetState& init, double s0, double s1,
                                           double step);

/// Complexified Frenet quantities of the case 1/2 closed-form curve at s:
/// kappa^2 = C''.C'' and tau = det(C', C'', C''') / (C''.C'') with the bilinear
/// (non-conjugating) product. tau is empty where kappa^2 vanishes (s + delta == 0).
struct ComplexFrenet {
  cplx kappa_sq;
  std::optional<cplx> tau_signed;
};

ComplexFrenet complex_frenet_check(FCase which, double s, const HelixParams& p);

struct KappaTauEstimate {
  double parameter;  ///< sample parameter at this point
  double sigma;      ///< arclength from the first sample
  double kappa;      ///< >= 0
  double tau;
  bool torsion_reliable;
};

struct CurvatureEstimateOptions {
  /// Torsion is flagged unreliable where kappa falls below this fraction of
  /// the largest kappa along the curve.
  double reliability_fraction = 1e-3;
  /// Relative tolerance on the uniformity of the parameter grid.
  double spacing_tolerance = 1e-6;
};

/// Fourth-order central-difference curvature and torsion at interior points
/// 3..n-4 of a uniformly sampled regular curve (at least 7 samples). sigma is
/// the trapezoidal integral of |r'| from the first sample.
std::vector<KappaTauEstimate> curvature_torsion_from_samples(
    std::span<const double> parameter, std::span<const Eigen::Vector3d> points,
    CurvatureEstimateOptions opts = {});

/// b ~= rotation * a + translation in the least-squares sense.
struct RigidAlignment {
  Eigen::Matrix3d rotation;
  Eigen::Vector3d translation;
  double rms;
};

/// Kabsch alignment with det(rotation) = +1. Throws DegenerateError when the
/// point set is (nearly) collinear and the rotation is not determined.
RigidAlignment rigid_align(std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b);

}  // namespace clothoid
