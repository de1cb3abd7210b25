#include "biproj/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace biproj::simd {
namespace {

Isa initial_isa() noexcept {
  const char* env = std::getenv("BIPROJ_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return detected_isa();
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
#if BIPROJ_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

#if BIPROJ_HAVE_AVX2_KERNELS
#define BIPROJ_DISPATCH(fn, ...)                                        \
  (active_isa() == Isa::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define BIPROJ_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void fp_axpy(std::span<std::uint32_t> dst, std::uint32_t c,
             std::span<const std::uint32_t> src, std::uint32_t p) {
  if (c == 0) return;
  BIPROJ_DISPATCH(fp_axpy, dst, c, src, p);
}

void fp_scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  BIPROJ_DISPATCH(fp_scale, dst, c, p);
}

double f64_dot(std::span<const double> x, std::span<const double> y) {
  return BIPROJ_DISPATCH(f64_dot, x, y);
}

void f64_axpy(std::span<double> y, double a, std::span<const double> x) {
  BIPROJ_DISPATCH(f64_axpy, y, a, x);
}

void f64_rot(std::span<double> x, std::span<double> y, double c, double s) {
  BIPROJ_DISPATCH(f64_rot, x, y, c, s);
}

#undef BIPROJ_DISPATCH

}  // namespace biproj::simd
