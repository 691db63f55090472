#include "clothoid/frenet.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

#include "clothoid/errors.hpp"

namespace clothoid {

namespace {

using Eigen::Vector3d;

struct FrameRate {
  Vector3d dr;
  Vector3d dT;
  Vector3d dN;
  Vector3d dB;
};

FrameRate frenet_rhs(const FrenetState& f, double kappa, double tau) {
  return {f.T, kappa * f.N, -kappa * f.T + tau * f.B, -tau * f.N};
}

FrenetState advance(const FrenetState& f, const FrameRate& r, double h) {
  return {f.position + h * r.dr, f.T + h * r.dT, f.N + h * r.dN, f.B + h * r.dB};
}

void reorthonormalize(FrenetState& f) {
  f.T.normalize();
  f.N -= f.N.dot(f.T) * f.T;
  f.N.normalize();
  f.B -= f.B.dot(f.T) * f.T;
  f.B -= f.B.dot(f.N) * f.N;
  f.B.normalize();
}

FrenetState step_rk4(const CurvatureTorsionProfile& profile, const FrenetState& f, double s,
                     double h) {
  const double s_mid = s + 0.5 * h;
  const double k_mid = profile.kappa(s_mid);
  const double t_mid = profile.tau(s_mid);
  const FrameRate k1 = frenet_rhs(f, profile.kappa(s), profile.tau(s));
  const FrameRate k2 = frenet_rhs(advance(f, k1, 0.5 * h), k_mid, t_mid);
  const FrameRate k3 = frenet_rhs(advance(f, k2, 0.5 * h), k_mid, t_mid);
  const FrameRate k4 = frenet_rhs(advance(f, k3, h), profile.kappa(s + h), profile.tau(s + h));
  const double w = h / 6.0;
  FrenetState out{
      f.position + w * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr),
      f.T + w * (k1.dT + 2.0 * k2.dT + 2.0 * k3.dT + k4.dT),
      f.N + w * (k1.dN + 2.0 * k2.dN + 2.0 * k3.dN + k4.dN),
      f.B + w * (k1.dB + 2.0 * k2.dB + 2.0 * k3.dB + k4.dB),
  };
  reorthonormalize(out);
  return out;
}

cplx bilinear_dot(const TangentTriple& a, const TangentTriple& b) {
  return a.a1 * b.a1 + a.a2 * b.a2 + a.a3 * b.a3;
}

cplx det3(const TangentTriple& a, const TangentTriple& b, const TangentTriple& c) {
  return a.a1 * (b.a2 * c.a3 - b.a3 * c.a2) - a.a2 * (b.a1 * c.a3 - b.a3 * c.a1) +
         a.a3 * (b.a1 * c.a2 - b.a2 * c.a1);
}

}  // namespace

double orthonormality_defect(const FrenetState& f) {
  Eigen::Matrix3d frame;
  frame << f.T, f.N, f.B;
  return (frame.transpose() * frame - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

std::vector<FrenetSample> frenet_integrate(const CurvatureTorsionProfile& profile,
                                           const FrenetState& init, double s0, double s1,
                                           double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("frenet_integrate: step must be > 0");
  if (!std::isfinite(s0) || !std::isfinite(s1)) throw DomainError("frenet_integrate: bounds must be finite");

  const double dir = s1 >= s0 ? 1.0 : -1.0;
  const auto n_steps = static_cast<long long>(std::ceil(std::fabs(s1 - s0) / step - 1e-12));
  std::vector<FrenetSample> out;
  out.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.push_back({s0, init});

  FrenetState state = init;
  double s = s0;
  for (long long i = 0; i < n_steps; ++i) {
    const double s_next = (i + 1 == n_steps) ? s1 : s0 + dir * step * static_cast<double>(i + 1);
    const double kappa = profile.kappa(s);
    const double tau = profile.tau(s);
    if (!std::isfinite(kappa) || !std::isfinite(tau)) {
      throw DomainError("frenet_integrate: non-finite curvature or torsion at s = " + std::to_string(s));
    }
    state = step_rk4(profile, state, s, s_next - s);
    s = s_next;
    out.push_back({s, state});
  }
  return out;
}

ComplexFrenet complex_frenet_check(FCase which, double s, const HelixParams& p) {
  const TangentJet jet = alpha_closed_form_jet(which, s, p);
  const cplx kappa_sq = bilinear_dot(jet.d1, jet.d1);
  ComplexFrenet out{kappa_sq, std::nullopt};
  if (s + p.delta != 0.0 && kappa_sq != cplx{}) {
    out.tau_signed = det3(jet.value, jet.d1, jet.d2) / kappa_sq;
  }
  return out;
}

std::vector<KappaTauEstimate> curvature_torsion_from_samples(
    std::span<const double> parameter, std::span<const Vector3d> points,
    CurvatureEstimateOptions opts) {
  const std::size_t n = points.size();
  if (parameter.size() != n) throw DomainError("curvature estimate: parameter/point count mismatch");
  if (n < 7) throw DomainError("curvature estimate: need at least 7 samples");
  const double h = (parameter[n - 1] - parameter[0]) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw DomainError("curvature estimate: parameter must increase");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::fabs((parameter[i] - parameter[i - 1]) - h) > opts.spacing_tolerance * h) {
      throw DomainError("curvature estimate: parameter grid is not uniform");
    }
  }

  // Fourth-order central stencils; second order within two samples of an end.
  auto first = [&](std::size_t i) -> Vector3d {
    if (i >= 2 && i + 2 < n) {
      return (-points[i + 2] + 8.0 * points[i + 1] - 8.0 * points[i - 1] + points[i - 2]) / (12.0 * h);
    }
    if (i == 0) return (-3.0 * points[0] + 4.0 * points[1] - points[2]) / (2.0 * h);
    if (i == n - 1) return (3.0 * points[n - 1] - 4.0 * points[n - 2] + points[n - 3]) / (2.0 * h);
    return (points[i + 1] - points[i - 1]) / (2.0 * h);
  };
  std::vector<double> speed(n);
  for (std::size_t i = 0; i < n; ++i) speed[i] = first(i).norm();
  std::vector<double> sigma(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) sigma[i] = sigma[i - 1] + 0.5 * h * (speed[i] + speed[i - 1]);

  std::vector<KappaTauEstimate> out;
  out.reserve(n - 6);
  double kappa_max = 0.0;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    const Vector3d d1 = first(i);
    const Vector3d d2 = (-points[i + 2] + 16.0 * points[i + 1] - 30.0 * points[i] + 16.0 * points[i - 1] -
                         points[i - 2]) / (12.0 * h * h);
    const Vector3d d3 = (-points[i + 3] + 8.0 * points[i + 2] - 13.0 * points[i + 1] + 13.0 * points[i - 1] -
                         8.0 * points[i - 2] + points[i - 3]) / (8.0 * h * h * h);
    const double v = d1.norm();
    if (!(v > 0.0)) throw DomainError("curvature estimate: curve is not regular");
    const Vector3d cross = d1.cross(d2);
    const double cross_sq = cross.squaredNorm();
    const double kappa = std::sqrt(cross_sq) / (v * v * v);
    const double tau = cross_sq > 0.0 ? cross.dot(d3) / cross_sq : 0.0;
    kappa_max = std::max(kappa_max, kappa);
    out.push_back({parameter[i], sigma[i], kappa, tau, true});
  }
  for (auto& e : out) e.torsion_reliable = kappa_max > 0.0 && e.kappa >= opts.reliability_fraction * kappa_max;
  return out;
}

RigidAlignment rigid_align(std::span<const Vector3d> a, std::span<const Vector3d> b) {
  if (a.size() != b.size()) throw DomainError("rigid_align: point counts differ");
  if (a.size() < 3) throw DegenerateError("rigid_align: need at least 3 points");
  const auto count = static_cast<double>(a.size());

  Vector3d ca = Vector3d::Zero();
  Vector3d cb = Vector3d::Zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca += a[i];
    cb += b[i];
  }
  ca /= count;
  cb /= count;

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d spread_a = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (b[i] - cb) * (a[i] - ca).transpose();
    spread_a += (a[i] - ca) * (a[i] - ca).transpose();
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> spread(spread_a);
  const Vector3d ev = spread.eigenvalues();  // ascending
  if (!(ev(1) > 1e-16 * ev(2)) || !(ev(2) > 0.0)) {
    throw DegenerateError("rigid_align: points are collinear; rotation is ambiguous");
  }

  const Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d fix = Eigen::Matrix3d::Identity();
  if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0) fix(2, 2) = -1.0;
  const Eigen::Matrix3d rotation = svd.matrixU() * fix * svd.matrixV().transpose();
  const Vector3d translation = cb - rotation * ca;

  double sum_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum_sq += (rotation * a[i] + translation - b[i]).squaredNorm();
  return {rotation, translation, std::sqrt(sum_sq / count)};
}

}  // namespace clothoid
