#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature for small fixed-size
// vector integrands. The interval with the largest error estimate is bisected
// until the summed estimate meets the tolerance or the budget runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

namespace clothoid::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_intervals = 20000;
};

template <std::size_t N>
struct Result {
  std::array<double, N> value{};
  double error_estimate = 0.0;  ///< max over components
  std::size_t intervals = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Segment {
  double a;
  double b;
  std::array<double, N> value;
  double error;

  bool operator<(const Segment& o) const { return error < o.error; }
};

template <std::size_t N, class F>
Segment<N> gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, N> kronrod{};
  std::array<double, N> gauss{};

  const std::array<double, N> fc = f(center);
  for (std::size_t j = 0; j < N; ++j) {
    kronrod[j] = kWgk[7] * fc[j];
    gauss[j] = kWg[3] * fc[j];
  }
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const std::array<double, N> lo = f(center - dx);
    const std::array<double, N> hi = f(center + dx);
    for (std::size_t j = 0; j < N; ++j) {
      const double pair = lo[j] + hi[j];
      kronrod[j] += kWgk[i] * pair;
      if (i % 2 == 1) gauss[j] += kWg[i / 2] * pair;
    }
  }
  Segment<N> seg{a, b, {}, 0.0};
  for (std::size_t j = 0; j < N; ++j) {
    seg.value[j] = kronrod[j] * half;
    seg.error = std::max(seg.error, std::fabs((kronrod[j] - gauss[j]) * half));
  }
  return seg;
}

}  // namespace detail

/// F: double -> std::array<double, N>. Integrates from a to b (b < a allowed).
template <std::size_t N, class F>
Result<N> integrate(const F& f, double a, double b, Options opts = {}) {
  Result<N> out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Segment<N>> heap;
  heap.push(detail::gk15<N>(f, a, b));
  double total_error = heap.top().error;
  std::array<double, N> total = heap.top().value;

  auto tolerance = [&] {
    double mag = 0.0;
    for (double v : total) mag = std::max(mag, std::fabs(v));
    return std::max(opts.abs_tol, opts.rel_tol * mag);
  };

  while (total_error > tolerance() && heap.size() < opts.max_intervals) {
    const detail::Segment<N> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      heap.push(worst);
      break;
    }
    auto left = detail::gk15<N>(f, worst.a, mid);
    auto right = detail::gk15<N>(f, mid, worst.b);
    for (std::size_t j = 0; j < N; ++j) total[j] += left.value[j] + right.value[j] - worst.value[j];
    total_error += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }

  // Re-sum from the segments to drop the drift of the running updates.
  out.value = {};
  out.error_estimate = 0.0;
  out.intervals = heap.size();
  while (!heap.empty()) {
    const auto& seg = heap.top();
    for (std::size_t j = 0; j < N; ++j) out.value[j] += seg.value[j];
    out.error_estimate += seg.error;
    heap.pop();
  }
  out.converged = out.error_estimate <= tolerance();
  return out;
}

/// Scalar convenience wrapper.
Result<1> integrate_scalar(const std::function<double(double)>& f, double a, double b,
                           Options opts = {});

}  // namespace clothoid::quad
