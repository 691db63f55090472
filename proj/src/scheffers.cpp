#include "clothoid/scheffers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clothoid/errors.hpp"

namespace clothoid {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_closed_form_case(FCase which) {
  if (which != FCase::one && which != FCase::two) {
    throw UnsupportedParameters("closed forms exist only for cases 1 and 2, got case " +
                                std::to_string(static_cast<int>(which)));
  }
}

TangentTriple mirror(const TangentTriple& t) { return {t.a1, -t.a2, -t.a3}; }

}  // namespace

FCase fcase_from_int(int id) {
  if (id < 1 || id > 4) throw DomainError("case id must be in 1..4, got " + std::to_string(id));
  return static_cast<FCase>(id);
}

TangentTriple alpha_from_f(const FQuadruple& q, ScheffersOptions opts) {
  const cplx d = q.discriminant();
  const double scale = std::max({std::norm(q.f1), std::norm(q.f2), std::norm(q.f3), std::norm(q.f4)});
  if (!(std::abs(d) > opts.degeneracy_threshold * scale)) {
    throw DegenerateError("Scheffers map: discriminant f1 f4 - f2 f3 vanishes");
  }
  const cplx f1s = q.f1 * q.f1;
  const cplx f2s = q.f2 * q.f2;
  const cplx f3s = q.f3 * q.f3;
  const cplx f4s = q.f4 * q.f4;
  const cplx two_d = 2.0 * d;
  return {(f1s - f2s - f3s + f4s) / two_d,
          kI * (f1s + f2s - f3s - f4s) / two_d,
          (q.f3 * q.f4 - q.f1 * q.f2) / d};
}

FQuadruple f_set(FCase which, double s, const HelixParams& p) {
  validate(p);
  if (p.shifted() && (which == FCase::three || which == FCase::four)) {
    throw UnsupportedParameters("shifted f-sets exist only for cases 1 and 2");
  }
  const auto [w1, w2] = riccati_constants(p.k);
  const cplx e = std::polar(1.0, clothoid_phase(s, p));
  const cplx one{1.0, 0.0};
  switch (which) {
    case FCase::one: return {w1 * e, w2, e, one};
    case FCase::two: return {w2, w1 * e, one, e};
    case FCase::three: return {w1 * e, w2, one, e};
    case FCase::four: return {w2, w1 * e, e, one};
  }
  throw DomainError("invalid case id");
}

TangentTriple alpha_closed_form(FCase which, double s, const HelixParams& p) {
  return alpha_closed_form_jet(which, s, p).value;
}

TangentJet alpha_closed_form_jet(FCase which, double s, const HelixParams& p) {
  require_closed_form_case(which);
  validate(p);
  const double root = std::hypot(p.k, 1.0);
  const double ratio = p.k / root;
  const double theta = clothoid_phase(s, p);
  const double rate = clothoid_phase_rate(s, p);
  const double accel = clothoid_phase_accel(p);
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);

  // u(theta) = (cos + i r sin, -sin + i r cos); u' = (-sin + i r cos, -cos - i r sin) = v,
  // v' = (-cos - i r sin, sin - i r cos).
  const cplx u1{cs, ratio * sn};
  const cplx u2{-sn, ratio * cs};
  const cplx v1{-sn, ratio * cs};
  const cplx v2{-cs, -ratio * sn};
  const cplx t1{-cs, -ratio * sn};
  const cplx t2{sn, -ratio * cs};
  const double k = p.k;
  const double rate2 = rate * rate;

  TangentJet jet{
      {k * u1, k * u2, cplx{1.0 / root, 0.0}},
      {k * rate * v1, k * rate * v2, cplx{}},
      {k * (accel * v1 + rate2 * t1), k * (accel * v2 + rate2 * t2), cplx{}},
  };
  if (which == FCase::two) {
    jet.value = mirror(jet.value);
    jet.d1 = mirror(jet.d1);
    jet.d2 = mirror(jet.d2);
  }
  return jet;
}

}  // namespace clothoid
