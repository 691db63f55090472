#include <atomic>
#include <cstdlib>

#include "clothoid/kernels.hpp"
#include "kernels/kernel_impl.hpp"

namespace clothoid::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(CLOTHOID_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (std::getenv("CLOTHOID_FORCE_SCALAR") != nullptr) return Isa::scalar;
  return detected_isa();
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{initial_isa()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  return isa;
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  active_slot().store(isa, std::memory_order_relaxed);
}

FresnelKernel fresnel_kernel(Isa isa) {
  switch (isa) {
    case Isa::scalar: return &detail::fresnel_scalar;
    case Isa::avx2:
#if defined(CLOTHOID_HAVE_AVX2_KERNELS)
      if (detected_isa() == Isa::avx2) return &detail::fresnel_avx2;
#endif
      return nullptr;
  }
  return nullptr;
}

SinCosKernel sincos_half_pi_sq_kernel(Isa isa) {
  switch (isa) {
    case Isa::scalar: return &detail::sincos_half_pi_sq_scalar;
    case Isa::avx2:
#if defined(CLOTHOID_HAVE_AVX2_KERNELS)
      if (detected_isa() == Isa::avx2) return &detail::sincos_half_pi_sq_avx2;
#endif
      return nullptr;
  }
  return nullptr;
}

}  // namespace clothoid::kernels
