#pragma once

#include <stdexcept>
#include <string>

namespace clothoid {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (non-finite input,
/// non-positive scale, unknown permutation case, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameter combination the closed forms do not cover, e.g. a shift with k != 1.
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// The rational Riccati solution has a pole: exp(i*theta) == -1.
class PoleError : public Error {
 public:
  PoleError(double s, double theta)
      : Error("Riccati solution has a pole at s = " + std::to_string(s) +
              " (phase " + std::to_string(theta) + " = pi mod 2pi)"),
        s_(s),
        theta_(theta) {}

  double s() const noexcept { return s_; }
  double theta() const noexcept { return theta_; }

 private:
  double s_;
  double theta_;
};

/// Geometric degeneracy: vanishing Scheffers discriminant, k == 0 helix,
/// collinear point sets in alignment.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}

  /// Error estimate reached before the subdivision budget ran out.
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace clothoid
