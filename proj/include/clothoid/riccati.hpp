#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace clothoid {

using cplx = std::complex<double>;

/// Clothoid helix family with curvature k*(s+delta)/c^2 and torsion (s+delta)/c^2.
struct HelixParams {
  double k = 1.0;      ///< curvature/torsion ratio
  double c = 1.0;      ///< dilation, length
  double delta = 0.0;  ///< arclength shift, length; nonzero only with k == 1

  bool shifted() const noexcept { return delta != 0.0; }
};

/// Checks c > 0, finiteness and the delta/k coupling. Throws DomainError or
/// UnsupportedParameters. k == 0 is accepted here (curve operations reject it).
void validate(const HelixParams& p);

/// The two constant Riccati solutions for the ratio k: w1 = k + sqrt(k^2+1),
/// w2 = k - sqrt(k^2+1). w1 * w2 == -1 and w1 + w2 == 2k.
struct RiccatiConstants {
  double w1;
  double w2;
};

RiccatiConstants riccati_constants(double k);

/// Coefficient functions of the Riccati equation, both in 1/length.
struct CurvatureTorsionProfile {
  std::function<double(double)> kappa;
  std::function<double(double)> tau;
};

/// kappa(s) = k (s + delta) / c^2, tau(s) = (s + delta) / c^2.
CurvatureTorsionProfile clothoid_profile(const HelixParams& p);

/// (kappa, tau) -> (-kappa, -tau).
CurvatureTorsionProfile negated(CurvatureTorsionProfile profile);

/// dw/ds = -i kappa w + i (tau/2) (w^2 - 1).
cplx riccati_rhs(cplx w, double kappa, double tau);

/// theta(s) such that the clothoid solution is (w1 e^{i theta} + w2)/(e^{i theta} + 1).
/// Unshifted: sqrt(k^2+1) s^2 / (2 c^2). Shifted (k == 1): s^2/(sqrt2 c^2) + sqrt2 delta s / c^2.
double clothoid_phase(double s, const HelixParams& p);

/// d theta / ds.
double clothoid_phase_rate(double s, const HelixParams& p);

/// d^2 theta / ds^2 (constant in s).
double clothoid_phase_accel(const HelixParams& p);

struct PoleOptions {
  /// Minimum angular distance of theta from an odd multiple of pi.
  double angular_tolerance = 1e-10;
};

/// Closed-form clothoid solution. Throws PoleError near e^{i theta} == -1.
///
/// With the e^{+i theta} convention this w satisfies riccati_rhs with the
/// negated profile, dw/ds = +i kappa w - i (tau/2)(w^2 - 1); its complex
/// conjugate satisfies riccati_rhs with clothoid_profile itself.
cplx clothoid_riccati_solution(double s, const HelixParams& p, PoleOptions opts = {});

/// Analytic derivative of clothoid_riccati_solution with respect to s.
cplx clothoid_riccati_derivative(double s, const HelixParams& p, PoleOptions opts = {});

/// Signed distance of theta from the nearest pole phase (pi mod 2pi), in radians.
double pole_phase_distance(double theta);

struct RiccatiPoint {
  double s;
  cplx w;
};

struct RiccatiTrajectory {
  std::vector<RiccatiPoint> points;  ///< includes the initial point
  bool blew_up = false;              ///< |w| exceeded the threshold
  double last_valid_s = 0.0;
};

struct RiccatiIntegrateOptions {
  double blow_up_threshold = 1e8;
};

/// Classical RK4 from s0 to s1 (either direction) with step magnitude `step`;
/// the last step is shortened to land on s1. Stops early on blow-up, which is
/// reported rather than thrown since Riccati solutions have movable poles.
RiccatiTrajectory riccati_integrate(const CurvatureTorsionProfile& profile, cplx w0,
                                    double s0, double s1, double step,
                                    RiccatiIntegrateOptions opts = {});

}  // namespace clothoid
