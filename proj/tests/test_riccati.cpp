#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "clothoid/errors.hpp"
#include "clothoid/riccati.hpp"

using namespace clothoid;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI{0.0, 1.0};

double error_at_one(const CurvatureTorsionProfile& prof, double h) {
  const HelixParams unit{1, 1, 0};
  const auto t = riccati_integrate(prof, clothoid_riccati_solution(0.0, unit), 0.0, 1.0, h);
  return std::abs(t.points.back().w - clothoid_riccati_solution(1.0, unit));
}
}  // namespace

TEST_CASE("riccati_rhs examples") {
  for (double kappa : {0.3, 1.0, -2.5}) {
    CHECK(std::abs(riccati_rhs(1.0, kappa, kappa) - (-kI * kappa)) < 1e-15);
  }
  CHECK(std::abs(riccati_rhs(0.0, 7.0, 2.0) - (-kI)) < 1e-15);
  CHECK(std::abs(riccati_rhs(kI, 3.0, 2.0) - cplx{3.0, -2.0}) < 1e-15);
}

TEST_CASE("phase examples") {
  CHECK(clothoid_phase(0.0, HelixParams{2, 0.5, 0}) == 0.0);
  CHECK(clothoid_phase(0.0, HelixParams{1, 0.5, 1.2}) == 0.0);
  CHECK(clothoid_phase(1.0, HelixParams{1, 1, 0}) == doctest::Approx(0.7071068).epsilon(1e-7));
  CHECK(clothoid_phase(1.0, HelixParams{1, 1, 1}) == doctest::Approx(2.1213203).epsilon(1e-7));
  CHECK_THROWS_AS(clothoid_phase(1.0, HelixParams{2, 1, 1}), UnsupportedParameters);
}

TEST_CASE("phase derivatives match finite differences") {
  for (const HelixParams& p : {HelixParams{1, 1, 0}, HelixParams{3, 0.7, 0}, HelixParams{1, 1.3, -0.8}}) {
    for (double s : {-2.0, -0.3, 0.0, 1.1, 2.7}) {
      const double h = 1e-5;
      const double fd = (clothoid_phase(s + h, p) - clothoid_phase(s - h, p)) / (2 * h);
      CHECK(clothoid_phase_rate(s, p) == doctest::Approx(fd).epsilon(1e-8));
      const double fd2 = (clothoid_phase_rate(s + h, p) - clothoid_phase_rate(s - h, p)) / (2 * h);
      CHECK(clothoid_phase_accel(p) == doctest::Approx(fd2).epsilon(1e-8));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(HelixParams{1, 0, 0}), DomainError);
  CHECK_THROWS_AS(validate(HelixParams{1, -1, 0}), DomainError);
  CHECK_THROWS_AS(validate(HelixParams{NAN, 1, 0}), DomainError);
  CHECK_THROWS_AS(validate(HelixParams{2, 1, 0.5}), UnsupportedParameters);
  CHECK_NOTHROW(validate(HelixParams{0, 1, 0}));
  CHECK_NOTHROW(validate(HelixParams{1, 2, -3}));
}

TEST_CASE("constant solutions") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-50.0, 50.0);
  for (int i = 0; i < 50; ++i) {
    const double k = d(rng);
    const auto [w1, w2] = riccati_constants(k);
    CHECK(std::fabs(w1 * w2 + 1.0) < 1e-13);
    CHECK(w1 + w2 == doctest::Approx(2 * k).epsilon(1e-12));
    // Both are fixed points for any common scale of kappa = k t, tau = t.
    CHECK(std::abs(riccati_rhs(w1, k * 0.7, 0.7)) < 1e-9 * (1 + w1 * w1));
    CHECK(std::abs(riccati_rhs(w2, k * 0.7, 0.7)) < 1e-9);
  }
}

TEST_CASE("closed form at s = 0 is k") {
  for (double k : {0.5, 1.0, 2.0, -3.0}) {
    CHECK(std::abs(clothoid_riccati_solution(0.0, HelixParams{k, 1.4, 0}) - cplx{k, 0}) < 1e-14);
  }
}

TEST_CASE("pole at theta = pi") {
  const double s_pole = std::sqrt(std::sqrt(2.0) * kPi);
  const HelixParams unit{1, 1, 0};
  CHECK(std::fabs(pole_phase_distance(clothoid_phase(s_pole, unit))) < 1e-14);
  CHECK_THROWS_AS(clothoid_riccati_solution(s_pole, unit), PoleError);
  try {
    clothoid_riccati_solution(s_pole, unit);
  } catch (const PoleError& e) {
    CHECK(e.s() == s_pole);
  }
  CHECK_NOTHROW(clothoid_riccati_solution(s_pole + 1e-3, unit));
  CHECK(pole_phase_distance(kPi) == 0.0);
  CHECK(std::fabs(pole_phase_distance(3 * kPi)) < 1e-15);
  CHECK(pole_phase_distance(0.0) == doctest::Approx(-kPi));
}

TEST_CASE("analytic derivative matches finite differences") {
  for (const HelixParams& p : {HelixParams{1, 1, 0}, HelixParams{2, 0.8, 0}, HelixParams{1, 1, 1.49}}) {
    for (double s : {-1.3, -0.2, 0.4, 0.9}) {
      const double h = 1e-6;
      const cplx fd = (clothoid_riccati_solution(s + h, p) - clothoid_riccati_solution(s - h, p)) / (2 * h);
      CHECK(std::abs(clothoid_riccati_derivative(s, p) - fd) < 1e-6 * (1 + std::abs(fd)));
    }
  }
}

TEST_CASE("closed form solves the equation with the negated profile") {
  for (const HelixParams& p : {HelixParams{1, 1, 0}, HelixParams{2, 1, 0}, HelixParams{0.5, 2, 0},
                               HelixParams{1, 1, 1.49}, HelixParams{1, 0.6, -0.4}}) {
    const auto prof = clothoid_profile(p);
    for (double s = -4.0; s <= 4.0; s += 0.173) {
      if (std::fabs(pole_phase_distance(clothoid_phase(s, p))) < 0.05) continue;
      const cplx w = clothoid_riccati_solution(s, p);
      const cplx dw = clothoid_riccati_derivative(s, p);
      const double scale = 1 + std::norm(w);
      CHECK(std::abs(dw - riccati_rhs(w, -prof.kappa(s), -prof.tau(s))) < 1e-12 * scale * (1 + std::fabs(s)));
      CHECK(std::abs(std::conj(dw) - riccati_rhs(std::conj(w), prof.kappa(s), prof.tau(s))) <
            1e-12 * scale * (1 + std::fabs(s)));
    }
  }
}

TEST_CASE("negated flips both coefficients") {
  const auto prof = negated(clothoid_profile(HelixParams{2, 1, 0}));
  CHECK(prof.kappa(1.5) == -3.0);
  CHECK(prof.tau(1.5) == -1.5);
}

TEST_CASE("integrator with a zero profile keeps w constant") {
  const CurvatureTorsionProfile zero{[](double) { return 0.0; }, [](double) { return 0.0; }};
  const cplx w0{0.3, -1.7};
  const auto t = riccati_integrate(zero, w0, 2.0, -1.0, 0.07);
  CHECK(t.points.front().s == 2.0);
  CHECK(t.points.back().s == -1.0);
  for (const auto& pt : t.points) CHECK(pt.w == w0);
}

TEST_CASE("integrator reproduces the closed form") {
  const HelixParams unit{1, 1, 0};
  const auto prof = clothoid_profile(unit);
  const auto t = riccati_integrate(negated(prof), 1.0, 0.0, 1.0, 1e-3);
  CHECK(std::abs(t.points.back().w - clothoid_riccati_solution(1.0, unit)) < 1e-8);
  // With the stated profile the trajectory is the conjugate.
  const auto c = riccati_integrate(prof, 1.0, 0.0, 1.0, 1e-3);
  CHECK(std::abs(c.points.back().w - std::conj(clothoid_riccati_solution(1.0, unit))) < 1e-8);

  const HelixParams shifted{1, 1, 0.7};
  const auto ts = riccati_integrate(negated(clothoid_profile(shifted)), clothoid_riccati_solution(0.0, shifted),
                                    0.0, -0.9, 1e-3);
  CHECK(std::abs(ts.points.back().w - clothoid_riccati_solution(-0.9, shifted)) < 1e-8);
}

TEST_CASE("integrator restarted past a pole re-converges") {
  const HelixParams unit{1, 1, 0};
  const double s_pole = std::sqrt(std::sqrt(2.0) * kPi);
  const double s0 = s_pole + 0.1;
  const auto t = riccati_integrate(negated(clothoid_profile(unit)), clothoid_riccati_solution(s0, unit), s0,
                                   s0 + 0.4, 1e-4);
  CHECK_FALSE(t.blew_up);
  CHECK(std::abs(t.points.back().w - clothoid_riccati_solution(s0 + 0.4, unit)) < 1e-8);
}

TEST_CASE("blow-up is reported") {
  // w' = i (w^2 - 1) from w = 0 is w = -i tan(s), singular at pi/2.
  const CurvatureTorsionProfile p{[](double) { return 0.0; }, [](double) { return 2.0; }};
  const auto t = riccati_integrate(p, 0.0, 0.0, 3.0, 1e-3);
  CHECK(t.blew_up);
  CHECK(t.last_valid_s < kPi / 2 + 1e-3);
  CHECK(t.last_valid_s > kPi / 2 - 1e-2);
  CHECK(std::abs(t.points[500].w - cplx{0, -std::tan(0.5)}) < 1e-10);
}

TEST_CASE("integrator is fourth order") {
  const auto prof = negated(clothoid_profile(HelixParams{1, 1, 0}));
  const double e1 = error_at_one(prof, 0.02);
  const double e2 = error_at_one(prof, 0.01);
  MESSAGE("error ratio " << e1 / e2);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("integrator rejects bad steps") {
  const auto prof = clothoid_profile(HelixParams{});
  CHECK_THROWS_AS(riccati_integrate(prof, 1.0, 0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(riccati_integrate(prof, 1.0, 0.0, 1.0, -1e-3), DomainError);
}
