#pragma once

#include <cstddef>

#include "clothoid/kernels.hpp"

namespace clothoid::kernels::detail {

void fresnel_scalar(const double* x, double* c, double* s, std::size_t n);
void sincos_half_pi_sq_scalar(const double* x, double* cos_out, double* sin_out,
                              std::size_t n);

#if defined(CLOTHOID_HAVE_AVX2_KERNELS)
void fresnel_avx2(const double* x, double* c, double* s, std::size_t n);
void sincos_half_pi_sq_avx2(const double* x, double* cos_out, double* sin_out,
                            std::size_t n);
#endif

}  // namespace clothoid::kernels::detail
