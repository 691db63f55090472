#include "clothoid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "clothoid/curve.hpp"
#include "clothoid/errors.hpp"
#include "clothoid/fresnel.hpp"
#include "clothoid/frenet.hpp"
#include "clothoid/kernels.hpp"
#include "clothoid/quadrature.hpp"
#include "clothoid/riccati.hpp"
#include "clothoid/scheffers.hpp"

namespace clothoid::verify {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double delta0(double c = 1.0) { return delta_sequence(0, c).front(); }

double max_abs(cplx a, cplx b) {
  return std::max(std::fabs(a.real() - b.real()), std::fabs(a.imag() - b.imag()));
}

double max_abs(const TangentTriple& a, const TangentTriple& b) {
  return std::max({max_abs(a.a1, b.a1), max_abs(a.a2, b.a2), max_abs(a.a3, b.a3)});
}

double max_abs(const ComplexTriple& a, const ComplexTriple& b) {
  return std::max({max_abs(a.x, b.x), max_abs(a.y, b.y), max_abs(a.z, b.z)});
}

std::vector<double> grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

SuiteReport fresnel_suite() {
  SuiteReport r{Suite::fresnel, {}};

  double quad_dev = 0.0;
  double odd_dev = 0.0;
  quad::Options qopt;
  qopt.abs_tol = 1e-14;
  for (double x : grid(-10.0, 10.0, 201)) {
    const FresnelPair f = fresnel(x);
    const auto q = quad::integrate<2>(
        [](double t) {
          const double arg = 0.5 * kPi * t * t;
          return std::array<double, 2>{std::cos(arg), std::sin(arg)};
        },
        0.0, x, qopt);
    quad_dev = std::max({quad_dev, std::fabs(f.c_val - q.value[0]), std::fabs(f.s_val - q.value[1])});
    const FresnelPair m = fresnel(-x);
    odd_dev = std::max({odd_dev, std::fabs(m.c_val + f.c_val), std::fabs(m.s_val + f.s_val)});
  }
  r.checks.push_back({"fresnel vs adaptive Gauss-Kronrod, 201 points in [-10,10]", quad_dev, 1e-12});
  r.checks.push_back({"odd symmetry fresnel(-x) = -fresnel(x)", odd_dev, 0.0});

  // |C - 1/2| <= 1/(pi x): report the worst ratio against the envelope.
  double envelope_ratio = 0.0;
  for (double x : grid(8.0, 60.0, 521)) {
    const FresnelPair f = fresnel(x);
    const double env = 1.0 / (kPi * x);
    envelope_ratio = std::max({envelope_ratio, std::fabs(f.c_val - 0.5) / env, std::fabs(f.s_val - 0.5) / env});
  }
  r.checks.push_back({"asymptotic envelope |F(x) - 1/2| * pi x for x in [8,60]", envelope_ratio, 1.0});

  if (auto simd = kernels::fresnel_kernel(kernels::Isa::avx2)) {
    const auto xs = grid(-40.0, 40.0, 4003);
    std::vector<double> c0(xs.size()), s0(xs.size()), c1(xs.size()), s1(xs.size());
    kernels::fresnel_kernel(kernels::Isa::scalar)(xs.data(), c0.data(), s0.data(), xs.size());
    simd(xs.data(), c1.data(), s1.data(), xs.size());
    double dev = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) dev = std::max({dev, std::fabs(c0[i] - c1[i]), std::fabs(s0[i] - s1[i])});
    r.checks.push_back({"avx2 kernel vs scalar reference", dev, 1e-15});
  }
  return r;
}

double conj_residual() {
  double out = 0.0;
  for (const HelixParams& p : {HelixParams{1, 1, 0}, HelixParams{2, 1, 0}, HelixParams{1, 1, 1.49}}) {
    const CurvatureTorsionProfile prof = clothoid_profile(p);
    for (double s : grid(-10.0, 10.0, 2001)) {
      if (std::fabs(pole_phase_distance(clothoid_phase(s, p))) < 0.05) continue;
      const cplx w = std::conj(clothoid_riccati_solution(s, p));
      const cplx dw = std::conj(clothoid_riccati_derivative(s, p));
      out = std::max(out, std::abs(dw - riccati_rhs(w, prof.kappa(s), prof.tau(s))));
    }
  }
  return out;
}

SuiteReport riccati_suite() {
  SuiteReport r{Suite::riccati, {}};

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> kdist(-10.0, 10.0);
  double ident = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto [w1, w2] = riccati_constants(kdist(rng));
    ident = std::max(ident, std::fabs(w1 * w2 + 1.0));
  }
  r.checks.push_back({"w1 * w2 = -1 for 50 random k", ident, 1e-13});

  double residual = 0.0;
  double residual_stated = 0.0;
  for (const HelixParams& p : {HelixParams{1, 1, 0}, HelixParams{2, 1, 0}, HelixParams{1, 0.5, 0},
                               HelixParams{1, 1, 1.49}}) {
    const CurvatureTorsionProfile prof = clothoid_profile(p);
    for (double s : grid(-10.0, 10.0, 2001)) {
      if (std::fabs(pole_phase_distance(clothoid_phase(s, p))) < 0.05) continue;
      const cplx w = clothoid_riccati_solution(s, p);
      const cplx dw = clothoid_riccati_derivative(s, p);
      residual = std::max(residual, std::abs(dw - riccati_rhs(w, -prof.kappa(s), -prof.tau(s))));
      residual_stated = std::max(residual_stated, std::abs(dw - riccati_rhs(w, prof.kappa(s), prof.tau(s))));
    }
  }
  r.checks.push_back({"closed-form residual, negated profile, [-10,10], 4 sets", residual, 1e-9});
  r.checks.push_back({"closed-form residual, stated profile (info only)", residual_stated, 1e-9, false});
  r.checks.push_back({"conj(closed form) residual, stated profile", conj_residual(), 1e-9});

  const HelixParams unit{1, 1, 0};
  const auto traj =
      riccati_integrate(negated(clothoid_profile(unit)), clothoid_riccati_solution(0.0, unit), 0.0, 1.0, 1e-3);
  r.checks.push_back({"RK4 (negated profile) vs closed form at s = 1",
                      std::abs(traj.points.back().w - clothoid_riccati_solution(1.0, unit)), 1e-8});
  return r;
}

SuiteReport tangent_suite() {
  SuiteReport r{Suite::tangent, {}};
  double norm_dev = 0.0;
  double agree_dev = 0.0;
  const auto ss = grid(-6.0, 6.0, 101);
  for (double k : {1.0, -1.0, 2.0, -2.0, 0.5}) {
    for (double c : {0.5, 1.0, 2.0}) {
      const HelixParams p{k, c, 0.0};
      for (double s : ss) {
        for (int id = 1; id <= 4; ++id) {
          const TangentTriple a = alpha_from_f(f_set(fcase_from_int(id), s, p));
          norm_dev = std::max(norm_dev, std::abs(a.bilinear_norm() - 1.0));
        }
        for (FCase which : {FCase::one, FCase::two}) {
          agree_dev = std::max(agree_dev, max_abs(alpha_closed_form(which, s, p), alpha_from_f(f_set(which, s, p))));
        }
      }
    }
  }
  const HelixParams shifted{1.0, 1.0, delta0()};
  for (double s : ss) {
    for (FCase which : {FCase::one, FCase::two}) {
      const TangentTriple a = alpha_closed_form(which, s, shifted);
      norm_dev = std::max(norm_dev, std::abs(a.bilinear_norm() - 1.0));
      agree_dev = std::max(agree_dev, max_abs(a, alpha_from_f(f_set(which, s, shifted))));
    }
  }
  r.checks.push_back({"|a1^2 + a2^2 + a3^2 - 1|, cases 1-4", norm_dev, 1e-12});
  r.checks.push_back({"closed-form tangent vs Scheffers map, cases 1-2", agree_dev, 1e-12});
  return r;
}

SuiteReport curve_suite() {
  SuiteReport r{Suite::curve, {}};
  double quad_dev = 0.0;
  double deriv_dev = 0.0;
  double mirror_dev = 0.0;
  for (const HelixParams& p : {HelixParams{1, 1, 0}, HelixParams{2, 1, 0}, HelixParams{1, 1, delta0()}}) {
    const double h = 1e-4 * p.c;
    for (double s : grid(-5.0 * p.c, 5.0 * p.c, 41)) {
      for (FCase which : {FCase::one, FCase::two}) {
        const ComplexTriple closed = position_closed_form(which, s, p, Origin::zero_at_s0);
        quad_dev = std::max(quad_dev, max_abs(closed, position_quadrature(which, s, p)));

        auto pos = [&](double t) { return position_closed_form(which, t, p); };
        const ComplexTriple a = pos(s - 2 * h), b = pos(s - h), c = pos(s + h), d = pos(s + 2 * h);
        auto fd = [&](cplx ca, cplx cb, cplx cc, cplx cd) { return (ca - 8.0 * cb + 8.0 * cc - cd) / (12.0 * h); };
        const TangentTriple slope{fd(a.x, b.x, c.x, d.x), fd(a.y, b.y, c.y, d.y), fd(a.z, b.z, c.z, d.z)};
        deriv_dev = std::max(deriv_dev, max_abs(slope, alpha_closed_form(which, s, p)));
      }
      const ComplexTriple one = position_closed_form(FCase::one, s, p);
      const ComplexTriple two = position_closed_form(FCase::two, s, p);
      mirror_dev = std::max(mirror_dev, max_abs(two, ComplexTriple{one.x, -one.y, -one.z}));
    }
  }
  r.checks.push_back({"closed form vs quadrature, |s| <= 5c", quad_dev, 1e-8});
  r.checks.push_back({"central-difference derivative vs tangent", deriv_dev, 1e-6});
  r.checks.push_back({"case 2 = diag(1,-1,-1) case 1", mirror_dev, 0.0});

  const Foci f1 = foci(FCase::one, HelixParams{1, 1, 0});
  const Foci f2 = foci(FCase::two, HelixParams{1, 1, 0});
  r.checks.push_back({"case 1 foci on second bisectrix |x + y|",
                      f1.bisectrix == Bisectrix::second ? std::fabs(f1.plus.x() + f1.plus.y()) : 1.0, 1e-12});
  r.checks.push_back({"case 2 foci on first bisectrix |x - y|",
                      f2.bisectrix == Bisectrix::first ? std::fabs(f2.plus.x() - f2.plus.y()) : 1.0, 1e-12});

  double cos_dev = 0.0;
  for (double d : delta_sequence(10, 1.0)) cos_dev = std::max(cos_dev, std::fabs(std::cos(d * d / std::sqrt(2.0))));
  r.checks.push_back({"cos(delta_n^2 / (sqrt2 c^2)) = 0, n = 0..10", cos_dev, 1e-12});
  return r;
}

SuiteReport frenet_suite() {
  SuiteReport r{Suite::frenet, {}};
  double kappa_dev = 0.0;
  double tau_dev = 0.0;
  double sign_flips = 0.0;
  for (const HelixParams& p : {HelixParams{1, 1, 0}, HelixParams{2, 1, 0}, HelixParams{1, 1, delta0()}}) {
    for (FCase which : {FCase::one, FCase::two}) {
      double sign = 0.0;
      for (double s : grid(-5.0, 5.0, 200)) {
        const double st = s + p.delta;
        if (std::fabs(st) < 1e-3) continue;
        const ComplexFrenet cf = complex_frenet_check(which, s, p);
        const double expect = p.k * st / (p.c * p.c);
        kappa_dev = std::max(kappa_dev, std::abs(cf.kappa_sq - expect * expect) / (expect * expect));
        if (!cf.tau_signed) {
          tau_dev = std::numeric_limits<double>::infinity();
          continue;
        }
        const double tau_mag = std::fabs(st) / (p.c * p.c);
        tau_dev = std::max(tau_dev, std::fabs(std::abs(*cf.tau_signed) - tau_mag) / tau_mag);
        const double here = (cf.tau_signed->real() * st >= 0.0) ? 1.0 : -1.0;
        if (sign == 0.0) sign = here;
        if (here != sign) sign_flips += 1.0;
      }
    }
  }
  r.checks.push_back({"complex kappa^2 vs (k s~/c^2)^2, relative", kappa_dev, 1e-10});
  r.checks.push_back({"complex |tau| vs |s~|/c^2, relative", tau_dev, 1e-10});
  r.checks.push_back({"torsion sign changes within a branch", sign_flips, 0.0});

  const CurvatureTorsionProfile circle{[](double) { return 1.0; }, [](double) { return 0.0; }};
  const auto traj = frenet_integrate(circle, FrenetState{}, 0.0, 2.0 * kPi, 1e-4);
  double drift = 0.0;
  for (const auto& sample : traj) drift = std::max(drift, orthonormality_defect(sample.state));
  r.checks.push_back({"unit circle closure after 2 pi", traj.back().state.position.norm(), 1e-8});

  const CurvatureTorsionProfile wobble{[](double s) { return 1.0 + 0.5 * std::sin(s); },
                                       [](double s) { return 0.3 * std::cos(2.0 * s); }};
  const auto long_run = frenet_integrate(wobble, FrenetState{}, 0.0, 10.0, 1e-4);
  for (const auto& sample : long_run) drift = std::max(drift, orthonormality_defect(sample.state));
  r.checks.push_back({"frame orthonormality drift, 1e5 steps", drift, 1e-10});
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

Suite suite_from_string(std::string_view name) {
  if (name == "fresnel") return Suite::fresnel;
  if (name == "riccati") return Suite::riccati;
  if (name == "tangent") return Suite::tangent;
  if (name == "curve") return Suite::curve;
  if (name == "frenet") return Suite::frenet;
  if (name == "all") return Suite::all;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::fresnel: return "fresnel";
    case Suite::riccati: return "riccati";
    case Suite::tangent: return "tangent";
    case Suite::curve: return "curve";
    case Suite::frenet: return "frenet";
    case Suite::all: return "all";
  }
  return "all";
}

std::vector<SuiteReport> run(Suite suite) {
  std::vector<SuiteReport> out;
  auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::fresnel)) out.push_back(fresnel_suite());
  if (want(Suite::riccati)) out.push_back(riccati_suite());
  if (want(Suite::tangent)) out.push_back(tangent_suite());
  if (want(Suite::curve)) out.push_back(curve_suite());
  if (want(Suite::frenet)) out.push_back(frenet_suite());
  return out;
}

}  // namespace clothoid::verify
