#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Geometry>

#include <cmath>
#include <random>
#include <vector>

#include "clothoid/curve.hpp"
#include "clothoid/errors.hpp"
#include "clothoid/frenet.hpp"

using namespace clothoid;
using Eigen::Vector3d;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

CurvatureTorsionProfile constant(double kappa, double tau) {
  return {[kappa](double) { return kappa; }, [tau](double) { return tau; }};
}

struct Line {
  double slope;
  double intercept;
};

Line fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

Vector3d re(const TangentTriple& t) { return {t.a1.real(), t.a2.real(), t.a3.real()}; }

}  // namespace

TEST_CASE("straight line") {
  FrenetState init;
  init.position = {1, 2, 3};
  const auto out = frenet_integrate(constant(0, 0), init, 0.0, 2.5, 0.01);
  const auto& end = out.back().state;
  CHECK(out.back().s == 2.5);
  CHECK((end.position - Vector3d(3.5, 2, 3)).norm() < 1e-13);
  CHECK((end.T - init.T).norm() < 1e-15);
  CHECK((end.B - init.B).norm() < 1e-15);
}

TEST_CASE("unit circle closes") {
  const auto out = frenet_integrate(constant(1, 0), FrenetState{}, 0.0, 2 * kPi, 1e-4);
  CHECK(out.back().state.position.norm() < 1e-8);
  CHECK((out.back().state.T - Vector3d::UnitX()).norm() < 1e-8);
  // Quarter turn.
  const auto q = frenet_integrate(constant(1, 0), FrenetState{}, 0.0, kPi / 2, 1e-4);
  CHECK((q.back().state.position - Vector3d(1, 1, 0)).norm() < 1e-10);
}

TEST_CASE("orthonormality survives 1e5 steps") {
  const CurvatureTorsionProfile p{[](double s) { return 1 + 0.5 * std::sin(s); },
                                  [](double s) { return 0.3 * s; }};
  const auto out = frenet_integrate(p, FrenetState{}, 0.0, 10.0, 1e-4);
  CHECK(out.size() == 100001);
  double worst = 0.0;
  for (std::size_t i = 0; i < out.size(); i += 997) worst = std::max(worst, orthonormality_defect(out[i].state));
  worst = std::max(worst, orthonormality_defect(out.back().state));
  CHECK(worst < 1e-10);
  CHECK(out.back().state.T.cross(out.back().state.N).dot(out.back().state.B) == doctest::Approx(1.0));
}

TEST_CASE("integration backwards retraces the curve") {
  const CurvatureTorsionProfile p{[](double s) { return s; }, [](double s) { return 2 - s; }};
  const auto fwd = frenet_integrate(p, FrenetState{}, 0.0, 1.5, 1e-3);
  const auto back = frenet_integrate(p, fwd.back().state, 1.5, 0.0, 1e-3);
  CHECK(back.back().s == 0.0);
  CHECK(back.back().state.position.norm() < 1e-11);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(frenet_integrate(constant(1, 0), FrenetState{}, 0.0, 1.0, 0.0), DomainError);
  const CurvatureTorsionProfile bad{[](double) { return NAN; }, [](double) { return 0.0; }};
  CHECK_THROWS_AS(frenet_integrate(bad, FrenetState{}, 0.0, 1.0, 0.1), DomainError);
}

TEST_CASE("curvature and torsion of a circle and a helix") {
  std::vector<double> t;
  std::vector<Vector3d> circle, helix;
  const double r = 2.0, a = 2.0, b = 1.0;
  for (int i = 0; i <= 4000; ++i) {
    const double u = 0.0015 * i;
    t.push_back(u);
    circle.push_back({r * std::cos(u), r * std::sin(u), 0});
    helix.push_back({a * std::cos(u), a * std::sin(u), b * u});
  }
  for (const auto& e : curvature_torsion_from_samples(t, circle)) {
    CHECK(std::fabs(e.kappa - 1 / r) < 1e-6);
    CHECK(std::fabs(e.tau) < 1e-6);
  }
  for (const auto& e : curvature_torsion_from_samples(t, helix)) {
    CHECK(std::fabs(e.kappa - a / (a * a + b * b)) < 1e-6);
    CHECK(std::fabs(e.tau - b / (a * a + b * b)) < 1e-6);
    CHECK(e.torsion_reliable);
  }
}

TEST_CASE("straight stretches make torsion unreliable") {
  std::vector<double> t;
  std::vector<Vector3d> pts;
  for (int i = 0; i <= 400; ++i) {
    const double u = -2.0 + 0.01 * i;
    t.push_back(u);
    pts.push_back({u, u > 0 ? u * u * u : 0.0, 0});
  }
  const auto est = curvature_torsion_from_samples(t, pts);
  CHECK_FALSE(est.front().torsion_reliable);
  CHECK(est.back().torsion_reliable);
}

TEST_CASE("curvature estimate input checks") {
  std::vector<double> t = {0, 1, 2, 3, 4, 5};
  std::vector<Vector3d> p(6, Vector3d::Zero());
  CHECK_THROWS_AS(curvature_torsion_from_samples(t, p), DomainError);
  t.push_back(6.5);
  p.push_back(Vector3d::Zero());
  CHECK_THROWS_AS(curvature_torsion_from_samples(t, p), DomainError);
}

TEST_CASE("frenet round trip with kappa = tau = s") {
  const CurvatureTorsionProfile p{[](double s) { return s; }, [](double s) { return s; }};
  const auto out = frenet_integrate(p, FrenetState{}, 0.0, 2.0, 1e-4);
  std::vector<double> s;
  std::vector<Vector3d> pts;
  for (std::size_t i = 0; i < out.size(); i += 10) {
    s.push_back(out[i].s);
    pts.push_back(out[i].state.position);
  }
  for (const auto& e : curvature_torsion_from_samples(s, pts)) {
    CHECK(std::fabs(e.kappa - e.parameter) < 1e-5);
    if (e.parameter > 0.1) CHECK(std::fabs(e.tau - e.parameter) < 1e-5);
  }
}

TEST_CASE("complex frenet quantities") {
  const auto one = complex_frenet_check(FCase::one, 1.0, HelixParams{});
  CHECK(std::abs(one.kappa_sq - cplx{1, 0}) < 1e-12);
  REQUIRE(one.tau_signed.has_value());
  CHECK(std::abs(*one.tau_signed - cplx{-1, 0}) < 1e-12);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const double s = d(rng);
    const auto r = complex_frenet_check(FCase::one, s, HelixParams{2, 1, 0});
    CHECK(std::abs(r.kappa_sq - 4 * s * s) < 1e-10 * 4 * s * s);
  }
  const double d0 = std::pow(2.0, 0.25) * std::sqrt(kPi / 2);
  for (FCase which : {FCase::one, FCase::two}) {
    for (const HelixParams& p : {HelixParams{1.5, 0.8, 0}, HelixParams{1, 1.2, d0}}) {
      for (double s : {-3.1, -0.4, 0.7, 2.9}) {
        const double st = s + p.delta;
        const auto r = complex_frenet_check(which, s, p);
        REQUIRE(r.tau_signed.has_value());
        CHECK(std::abs(*r.tau_signed + st / (p.c * p.c)) < 1e-10 * std::fabs(st) / (p.c * p.c));
      }
    }
  }
  CHECK_FALSE(complex_frenet_check(FCase::one, 0.0, HelixParams{}).tau_signed.has_value());
  CHECK_FALSE(complex_frenet_check(FCase::two, -d0, HelixParams{1, 1, d0}).tau_signed.has_value());
}

TEST_CASE("rigid alignment") {
  std::vector<Vector3d> a;
  for (int i = 0; i < 50; ++i) a.push_back({std::cos(0.3 * i), std::sin(0.2 * i), 0.1 * i});
  const auto same = rigid_align(a, a);
  CHECK((same.rotation - Eigen::Matrix3d::Identity()).norm() < 1e-12);
  CHECK(same.translation.norm() < 1e-12);
  CHECK(same.rms < 1e-12);

  const Eigen::Matrix3d rot = Eigen::AngleAxisd(0.83, Vector3d(1, -2, 0.5).normalized()).toRotationMatrix();
  const Vector3d shift(0.4, -1, 3);
  std::vector<Vector3d> b;
  for (const auto& p : a) b.push_back(rot * p + shift);
  const auto fit_rb = rigid_align(a, b);
  CHECK((fit_rb.rotation - rot).norm() < 1e-10);
  CHECK((fit_rb.translation - shift).norm() < 1e-10);
  CHECK(fit_rb.rotation.determinant() == doctest::Approx(1.0));

  std::vector<Vector3d> line;
  for (int i = 0; i < 10; ++i) line.push_back(Vector3d(1, 2, 3) * i);
  CHECK_THROWS_AS(rigid_align(line, line), DegenerateError);
  CHECK_THROWS_AS(rigid_align(a, line), DomainError);
}

TEST_CASE("integrated profile reproduces the real part of the curve") {
  const HelixParams p{1, 1, 0};
  const double v = std::sqrt(p.k * p.k + 1 / (p.k * p.k + 1));

  // Sample the real part on 0 < s <= 3 and fit the slopes of kappa and tau in arclength.
  const auto curve = sample_curve(FCase::one, p, 0.05, 3.0, 2951);
  std::vector<double> s;
  std::vector<Vector3d> pts;
  for (const auto& smp : curve.samples) {
    s.push_back(smp.s);
    pts.push_back(split_parts(smp.position).first);
  }
  std::vector<double> sigma, kappa, tau;
  for (const auto& e : curvature_torsion_from_samples(s, pts)) {
    sigma.push_back(v * e.parameter);
    kappa.push_back(e.kappa);
    tau.push_back(e.tau);
  }
  const Line kf = fit(sigma, kappa);
  const Line tf = fit(sigma, tau);
  const double kappa_slope = p.k * std::sqrt(p.k * p.k + 1) / (p.c * p.c * v * v * v);
  const double tau_slope = -1 / (p.c * p.c * v * v * v);
  CHECK(kf.slope == doctest::Approx(kappa_slope).epsilon(1e-5));
  CHECK(tf.slope == doctest::Approx(tau_slope).epsilon(1e-5));

  // Frame of the real part at s = 0 from the tangent jet; kappa vanishes there,
  // so N is the direction of T' / sigma, i.e. of r''' at s = 0.
  const auto jet = alpha_closed_form_jet(FCase::one, 0.0, p);
  FrenetState init;
  init.T = re(jet.value).normalized();
  init.N = re(jet.d2).normalized();
  init.N = (init.N - init.N.dot(init.T) * init.T).normalized();
  init.B = init.T.cross(init.N);
  const CurvatureTorsionProfile prof{[&](double x) { return kf.slope * x; },
                                     [&](double x) { return tf.slope * x; }};
  const auto fwd = frenet_integrate(prof, init, 0.0, 3 * v, 1e-3 * v);
  const auto back = frenet_integrate(prof, init, 0.0, -3 * v, 1e-3 * v);

  std::vector<Vector3d> integrated, exact;
  for (const auto* run : {&fwd, &back}) {
    for (std::size_t i = 0; i < run->size(); i += 20) {
      const double sig = (*run)[i].s;
      integrated.push_back((*run)[i].state.position);
      exact.push_back(split_parts(position_closed_form(FCase::one, sig / v, p)).first);
    }
  }
  const auto align = rigid_align(integrated, exact);
  MESSAGE("rms " << align.rms);
  CHECK(align.rms <= 1e-4);
}
