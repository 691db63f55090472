#include "clothoid/riccati.hpp"

#include <cmath>
#include <utility>
#include <string>

#include "clothoid/errors.hpp"

namespace clothoid {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
constexpr cplx kI{0.0, 1.0};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

void validate(const HelixParams& p) {
  require_finite(p.k, "k");
  require_finite(p.c, "c");
  require_finite(p.delta, "delta");
  if (!(p.c > 0.0)) throw DomainError("c must be > 0, got " + std::to_string(p.c));
  if (p.shifted() && p.k != 1.0) {
    throw UnsupportedParameters("a nonzero shift delta is only supported with k = 1 (got k = " +
                                std::to_string(p.k) + ")");
  }
}

RiccatiConstants riccati_constants(double k) {
  require_finite(k, "k");
  const double root = std::hypot(k, 1.0);
  // w1 * w2 == -1; form the small-magnitude root from the large one to avoid cancellation.
  if (k >= 0.0) {
    const double w1 = k + root;
    return {w1, -1.0 / w1};
  }
  const double w2 = k - root;
  return {-1.0 / w2, w2};
}

CurvatureTorsionProfile clothoid_profile(const HelixParams& p) {
  validate(p);
  const double inv_c2 = 1.0 / (p.c * p.c);
  return {[k = p.k, d = p.delta, inv_c2](double s) { return k * (s + d) * inv_c2; },
          [d = p.delta, inv_c2](double s) { return (s + d) * inv_c2; }};
}

CurvatureTorsionProfile negated(CurvatureTorsionProfile profile) {
  return {[k = std::move(profile.kappa)](double s) { return -k(s); },
          [t = std::move(profile.tau)](double s) { return -t(s); }};
}

cplx riccati_rhs(cplx w, double kappa, double tau) {
  return -kI * kappa * w + kI * (0.5 * tau) * (w * w - 1.0);
}

double clothoid_phase(double s, const HelixParams& p) {
  validate(p);
  const double c2 = p.c * p.c;
  if (p.shifted()) return s * s / (kSqrt2 * c2) + kSqrt2 * p.delta * s / c2;
  return 0.5 * std::hypot(p.k, 1.0) * s * s / c2;
}

double clothoid_phase_rate(double s, const HelixParams& p) {
  validate(p);
  const double c2 = p.c * p.c;
  if (p.shifted()) return kSqrt2 * (s + p.delta) / c2;
  return std::hypot(p.k, 1.0) * s / c2;
}

double clothoid_phase_accel(const HelixParams& p) {
  validate(p);
  const double c2 = p.c * p.c;
  if (p.shifted()) return kSqrt2 / c2;
  return std::hypot(p.k, 1.0) / c2;
}

double pole_phase_distance(double theta) { return std::remainder(theta - kPi, 2.0 * kPi); }

cplx clothoid_riccati_solution(double s, const HelixParams& p, PoleOptions opts) {
  const double theta = clothoid_phase(s, p);
  if (std::fabs(pole_phase_distance(theta)) < opts.angular_tolerance) throw PoleError(s, theta);
  const auto [w1, w2] = riccati_constants(p.k);
  const cplx e = std::polar(1.0, theta);
  return (w1 * e + w2) / (e + 1.0);
}

cplx clothoid_riccati_derivative(double s, const HelixParams& p, PoleOptions opts) {
  const double theta = clothoid_phase(s, p);
  if (std::fabs(pole_phase_distance(theta)) < opts.angular_tolerance) throw PoleError(s, theta);
  const auto [w1, w2] = riccati_constants(p.k);
  const cplx e = std::polar(1.0, theta);
  const cplx den = e + 1.0;
  // d/ds (w1 e + w2)/(e + 1) = i theta' e (w1 - w2) / (e + 1)^2
  return kI * clothoid_phase_rate(s, p) * e * (w1 - w2) / (den * den);
}

RiccatiTrajectory riccati_integrate(const CurvatureTorsionProfile& profile, cplx w0,
                                    double s0, double s1, double step,
                                    RiccatiIntegrateOptions opts) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("riccati_integrate: step must be > 0");
  require_finite(s0, "s0");
  require_finite(s1, "s1");
  if (!std::isfinite(w0.real()) || !std::isfinite(w0.imag())) {
    throw DomainError("riccati_integrate: w0 must be finite");
  }

  auto f = [&](double s, cplx w) { return riccati_rhs(w, profile.kappa(s), profile.tau(s)); };

  RiccatiTrajectory out;
  out.points.push_back({s0, w0});
  out.last_valid_s = s0;
  const double dir = s1 >= s0 ? 1.0 : -1.0;
  const double span = std::fabs(s1 - s0);
  const auto n_steps = static_cast<long long>(std::ceil(span / step - 1e-12));
  out.points.reserve(static_cast<std::size_t>(n_steps) + 1);

  double s = s0;
  cplx w = w0;
  for (long long i = 0; i < n_steps; ++i) {
    const double s_next = (i + 1 == n_steps) ? s1 : s0 + dir * step * static_cast<double>(i + 1);
    const double h = s_next - s;
    const cplx k1 = f(s, w);
    const cplx k2 = f(s + 0.5 * h, w + 0.5 * h * k1);
    const cplx k3 = f(s + 0.5 * h, w + 0.5 * h * k2);
    const cplx k4 = f(s + h, w + h * k3);
    const cplx w_next = w + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!(std::abs(w_next) <= opts.blow_up_threshold)) {
      out.blew_up = true;
      return out;
    }
    s = s_next;
    w = w_next;
    out.points.push_back({s, w});
    out.last_valid_s = s;
  }
  return out;
}

}  // namespace clothoid
