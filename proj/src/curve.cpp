#include "clothoid/curve.hpp"

#include <array>
#include <cmath>
#include <string>

#include "clothoid/errors.hpp"
#include "clothoid/fresnel.hpp"

namespace clothoid {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
constexpr cplx kI{0.0, 1.0};

void validate_for_curve(const HelixParams& p) {
  validate(p);
  if (p.k == 0.0) throw DegenerateError("k = 0 degenerates the helix to a planar spiral");
}

void require_closed_form_case(FCase which) {
  if (which != FCase::one && which != FCase::two) {
    throw UnsupportedParameters("closed-form positions exist only for cases 1 and 2");
  }
}

ComplexTriple mirror(const ComplexTriple& t) { return {t.x, -t.y, -t.z}; }

ComplexTriple sub(const ComplexTriple& a, const ComplexTriple& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

// Everything the closed forms need besides the two scaled Fresnel integrals.
struct ClosedFormPlan {
  double scale;       // a in int_0 cos(a t^2) dt
  double shift;       // Fresnel integrals are taken at s + shift
  double weight;      // k
  double ratio;       // imaginary-part weight, k / sqrt(k^2+1)
  double z_slope;     // 1/sqrt(k^2+1)
  double cos_phi;     // rotation by phi = delta^2 / (sqrt2 c^2)
  double sin_phi;
};

ClosedFormPlan unshifted_plan(const HelixParams& p) {
  const double root = std::hypot(p.k, 1.0);
  return {0.5 * root / (p.c * p.c), 0.0, p.k, p.k / root, 1.0 / root, 1.0, 0.0};
}

ClosedFormPlan shifted_plan(double c, double delta) {
  const double phi = delta * delta / (kSqrt2 * c * c);
  return {1.0 / (kSqrt2 * c * c), delta, 1.0, 1.0 / kSqrt2, 1.0 / kSqrt2, std::cos(phi), std::sin(phi)};
}

ClosedFormPlan plan_for(const HelixParams& p) {
  return p.shifted() ? shifted_plan(p.c, p.delta) : unshifted_plan(p);
}

// Case-1 position from Ic = int_0^{s+shift} cos(a t^2), Is = int_0^{s+shift} sin(a t^2).
// With phase a t^2 - phi, the rotated integrals are
//   F1 = cos(phi) Ic + sin(phi) Is,  F2 = -sin(phi) Ic + cos(phi) Is,
// and x = k (F1 + i r F2), y = k (-F2 + i r F1), z = s / sqrt(k^2+1).
ComplexTriple assemble(const ClosedFormPlan& plan, double s, double ic, double is) {
  const double f1 = plan.cos_phi * ic + plan.sin_phi * is;
  const double f2 = -plan.sin_phi * ic + plan.cos_phi * is;
  return {plan.weight * cplx{f1, plan.ratio * f2},
          plan.weight * cplx{-f2, plan.ratio * f1},
          cplx{plan.z_slope * s, 0.0}};
}

ComplexTriple evaluate(const ClosedFormPlan& plan, FCase which, double s) {
  const FresnelPair fp = fresnel_scaled(s + plan.shift, plan.scale);
  const ComplexTriple t = assemble(plan, s, fp.c_val, fp.s_val);
  return which == FCase::two ? mirror(t) : t;
}

ComplexTriple with_origin(const ClosedFormPlan& plan, FCase which, double s, Origin origin) {
  ComplexTriple t = evaluate(plan, which, s);
  if (origin == Origin::zero_at_s0 && plan.shift != 0.0) t = sub(t, evaluate(plan, which, 0.0));
  return t;
}

std::array<double, 6> tangent_components(FCase which, double sigma, const HelixParams& p) {
  const TangentTriple a = alpha_from_f(f_set(which, sigma, p));
  return {a.a1.real(), a.a1.imag(), a.a2.real(), a.a2.imag(), a.a3.real(), a.a3.imag()};
}

}  // namespace

ComplexTriple position_closed_form(FCase which, double s, const HelixParams& p, Origin origin) {
  require_closed_form_case(which);
  validate_for_curve(p);
  if (!std::isfinite(s)) throw DomainError("s must be finite");
  return with_origin(plan_for(p), which, s, origin);
}

ComplexTriple position_closed_form_shifted(FCase which, double s, double c, double delta,
                                           Origin origin) {
  require_closed_form_case(which);
  validate_for_curve(HelixParams{1.0, c, delta});
  if (!std::isfinite(s)) throw DomainError("s must be finite");
  return with_origin(shifted_plan(c, delta), which, s, origin);
}

ComplexTriple closed_form_origin_offset(FCase which, const HelixParams& p) {
  return position_closed_form(which, 0.0, p, Origin::at_shift);
}

QuadraturePosition position_quadrature_detailed(FCase which, double s, const HelixParams& p,
                                                quad::Options opts) {
  validate_for_curve(p);
  if (!std::isfinite(s)) throw DomainError("s must be finite");
  f_set(which, 0.0, p);  // surfaces unsupported combinations before integrating

  auto integrand = [&](double sigma) { return tangent_components(which, sigma, p); };
  const auto r = quad::integrate<6>(integrand, 0.0, s, opts);
  QuadraturePosition out;
  out.value = {cplx{r.value[0], r.value[1]}, cplx{r.value[2], r.value[3]},
               cplx{r.value[4], r.value[5]}};
  out.error_estimate = r.error_estimate;
  out.converged = r.converged;
  return out;
}

ComplexTriple position_quadrature(FCase which, double s, const HelixParams& p, quad::Options opts) {
  const QuadraturePosition r = position_quadrature_detailed(which, s, p, opts);
  if (!r.converged) {
    throw QuadratureError("position quadrature did not reach tolerance " +
                              std::to_string(opts.abs_tol) + "; achieved " +
                              std::to_string(r.error_estimate),
                          r.error_estimate);
  }
  return r.value;
}

Curve sample_curve(FCase which, const HelixParams& p, double s_min, double s_max, std::size_t n,
                   SampleOptions opts) {
  validate_for_curve(p);
  if (!std::isfinite(s_min) || !std::isfinite(s_max) || !(s_min < s_max)) {
    throw DomainError("sample_curve: need finite s_min < s_max");
  }
  if (n < 2) throw DomainError("sample_curve: need at least 2 samples");

  Curve curve{p, which, {}};
  curve.samples.resize(n);
  const double step = (s_max - s_min) / static_cast<double>(opts.include_end ? n - 1 : n);
  for (std::size_t i = 0; i < n; ++i) {
    curve.samples[i].s = (opts.include_end && i + 1 == n) ? s_max : s_min + step * static_cast<double>(i);
  }

  if (which == FCase::one || which == FCase::two) {
    const ClosedFormPlan plan = plan_for(p);
    std::vector<double> args(n);
    std::vector<double> ic(n);
    std::vector<double> is(n);
    for (std::size_t i = 0; i < n; ++i) args[i] = curve.samples[i].s + plan.shift;
    fresnel_scaled_batch(args, plan.scale, ic, is);
    ComplexTriple offset{};
    if (opts.origin == Origin::zero_at_s0 && plan.shift != 0.0) offset = evaluate(plan, which, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      ComplexTriple t = assemble(plan, curve.samples[i].s, ic[i], is[i]);
      if (which == FCase::two) t = mirror(t);
      curve.samples[i].position = sub(t, offset);
    }
    return curve;
  }

  // Cases 3/4: accumulate quadrature between neighbouring samples.
  auto integrand = [&](double sigma) { return tangent_components(which, sigma, p); };
  ComplexTriple acc = position_quadrature(which, s_min, p);
  double prev_s = s_min;
  for (auto& sample : curve.samples) {
    if (sample.s != prev_s) {
      const auto r = quad::integrate<6>(integrand, prev_s, sample.s);
      if (!r.converged) {
        throw QuadratureError("sample_curve: quadrature did not converge", r.error_estimate);
      }
      acc.x += cplx{r.value[0], r.value[1]};
      acc.y += cplx{r.value[2], r.value[3]};
      acc.z += cplx{r.value[4], r.value[5]};
    }
    sample.position = acc;
    prev_s = sample.s;
  }
  return curve;
}

Foci foci(FCase which, const HelixParams& p) {
  require_closed_form_case(which);
  validate_for_curve(p);
  Eigen::Vector2d plus;
  if (p.shifted()) {
    const double amp = p.c * std::sqrt(kPi) / std::pow(2.0, 1.25);
    const double phi = p.delta * p.delta / (kSqrt2 * p.c * p.c);
    plus = {amp * (std::cos(phi) + std::sin(phi)), amp * (std::sin(phi) - std::cos(phi))};
  } else {
    const double amp = p.c * p.k * std::sqrt(kPi) / (2.0 * std::pow(p.k * p.k + 1.0, 0.25));
    plus = {amp, -amp};
  }
  if (which == FCase::two) plus.y() = -plus.y();

  Foci out{plus, -plus, Bisectrix::neither};
  const double mag = std::max(std::fabs(plus.x()), std::fabs(plus.y()));
  if (std::fabs(std::fabs(plus.x()) - std::fabs(plus.y())) <= 1e-12 * mag && mag > 0.0) {
    out.bisectrix = (plus.x() * plus.y() > 0.0) ? Bisectrix::first : Bisectrix::second;
  }
  return out;
}

std::vector<double> delta_sequence(int n_max, double c) {
  if (n_max < 0) throw DomainError("delta_sequence: n_max must be >= 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("delta_sequence: c must be > 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  const double front = std::pow(2.0, 0.25) * c;
  for (int n = 0; n <= n_max; ++n) out.push_back(front * std::sqrt((2.0 * n + 1.0) * kPi / 2.0));
  return out;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> split_parts(const ComplexTriple& t) {
  return {{t.x.real(), t.y.real(), t.z.real()}, {t.x.imag(), t.y.imag(), t.z.imag()}};
}

double fresnel_argument(double s, const HelixParams& p) {
  validate(p);
  if (p.shifted()) return std::pow(2.0, 0.25) * (s + p.delta) / (std::sqrt(kPi) * p.c);
  return std::pow(p.k * p.k + 1.0, 0.25) * s / (std::sqrt(kPi) * p.c);
}

double real_prefactor(const HelixParams& p) {
  validate(p);
  if (p.shifted()) return std::sqrt(kPi) * p.c / std::pow(2.0, 0.25);
  return std::sqrt(kPi) * p.c * p.k / std::pow(p.k * p.k + 1.0, 0.25);
}

}  // namespace clothoid
