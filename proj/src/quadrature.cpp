#include "clothoid/quadrature.hpp"

namespace clothoid::quad {

Result<1> integrate_scalar(const std::function<double(double)>& f, double a, double b,
                           Options opts) {
  return integrate<1>([&](double x) { return std::array<double, 1>{f(x)}; }, a, b, opts);
}

}  // namespace clothoid::quad
