#pragma once

// Batch kernels behind fresnel_batch(). Each kernel exists as a portable
// scalar reference and, where the target supports it, an AVX2 variant picked
// at runtime from CPUID. Both variants execute the same arithmetic sequence
// (no FMA contraction, identical reductions), so their outputs agree to the
// last ulp on conforming hardware.

#include <cstddef>
#include <string_view>

namespace clothoid::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA supported by both the build and the running CPU.
Isa detected_isa();

/// ISA used by the dispatched entry points. Defaults to detected_isa(), or
/// scalar when CLOTHOID_FORCE_SCALAR is set in the environment.
Isa active_isa();

/// Pin the dispatched ISA. Requests the CPU cannot honor fall back to scalar.
void set_active_isa(Isa isa);

/// n arguments in x; results to c and s. Inputs must be finite, no aliasing.
using FresnelKernel = void (*)(const double* x, double* c, double* s,
                               std::size_t n);

/// (cos(pi x^2 / 2), sin(pi x^2 / 2)) with the argument reduced exactly.
using SinCosKernel = void (*)(const double* x, double* cos_out,
                              double* sin_out, std::size_t n);

/// nullptr when the variant is not compiled in or not supported by the CPU.
FresnelKernel fresnel_kernel(Isa isa);
SinCosKernel sincos_half_pi_sq_kernel(Isa isa);

/// Argument below which the power series is used; continued fraction above.
inline constexpr double kFresnelSeriesCrossover = 1.6;

}  // namespace clothoid::kernels
