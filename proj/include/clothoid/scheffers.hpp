#pragma once

#include <complex>

#include "clothoid/riccati.hpp"

namespace clothoid {

/// Which of the four placements of e^{i theta} among (f1, f2, f3, f4) to use.
/// Only cases 1 and 2 have closed-form tangents and curves.
enum class FCase : int { one = 1, two = 2, three = 3, four = 4 };

/// Throws DomainError for ids outside 1..4.
FCase fcase_from_int(int id);

/// Fundamental functions of w = (C f1 + f2) / (C f3 + f4) at one s.
struct FQuadruple {
  cplx f1;
  cplx f2;
  cplx f3;
  cplx f4;

  cplx discriminant() const { return f1 * f4 - f2 * f3; }
};

/// Complex unit-tangent components; a1^2 + a2^2 + a3^2 == 1 (bilinear, no conjugation).
struct TangentTriple {
  cplx a1;
  cplx a2;
  cplx a3;

  cplx bilinear_norm() const { return a1 * a1 + a2 * a2 + a3 * a3; }
};

struct ScheffersOptions {
  /// |d| must exceed this times max |f_i|^2.
  double degeneracy_threshold = 1e-12;
};

/// Scheffers formulas. Throws DegenerateError when the discriminant vanishes.
TangentTriple alpha_from_f(const FQuadruple& q, ScheffersOptions opts = {});

/// E = e^{i theta(s)}:
///   case 1: (w1 E, w2, E, 1)   case 2: (w2, w1 E, 1, E)
///   case 3: (w1 E, w2, 1, E)   case 4: (w2, w1 E, E, 1)
/// Shifted parameters are only accepted for cases 1 and 2.
FQuadruple f_set(FCase which, double s, const HelixParams& p);

/// Closed-form tangent for cases 1 and 2:
///   a1 = k (cos th + i r sin th), a2 = k (-sin th + i r cos th), a3 = 1/sqrt(k^2+1),
/// r = k / sqrt(k^2+1); case 2 is (a1, -a2, -a3).
TangentTriple alpha_closed_form(FCase which, double s, const HelixParams& p);

/// First and second s-derivatives of alpha_closed_form.
struct TangentJet {
  TangentTriple value;
  TangentTriple d1;
  TangentTriple d2;
};

TangentJet alpha_closed_form_jet(FCase which, double s, const HelixParams& p);

}  // namespace clothoid
