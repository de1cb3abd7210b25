#pragma once

// Data-parallel inner loops used by the exact and floating linear algebra.
//
// Every kernel has a portable scalar reference in namespace `scalar` and,
// on x86-64, an AVX2/FMA variant in namespace `avx2`. The unqualified entry
// points dispatch to the variant chosen at startup (see active_isa()).
//
// Prime-field kernels operate on residues in [0, p) with p < 2^31.

#include <cstdint>
#include <span>
#include <string_view>

namespace biproj::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Best instruction set supported by the running CPU.
Isa detected_isa() noexcept;

/// Variant used by the dispatching entry points. Defaults to detected_isa()
/// unless the environment variable BIPROJ_SIMD=scalar is set.
Isa active_isa() noexcept;

/// Overrides the active variant; returns false (and changes nothing) when the
/// CPU lacks the requested instruction set.
bool set_active_isa(Isa isa) noexcept;

// dst[i] = (dst[i] + c * src[i]) mod p
void fp_axpy(std::span<std::uint32_t> dst, std::uint32_t c,
             std::span<const std::uint32_t> src, std::uint32_t p);
// dst[i] = (c * dst[i]) mod p
void fp_scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

double f64_dot(std::span<const double> x, std::span<const double> y);
// y += a * x
void f64_axpy(std::span<double> y, double a, std::span<const double> x);
// (x, y) <- (c x - s y, s x + c y)
void f64_rot(std::span<double> x, std::span<double> y, double c, double s);

namespace scalar {
void fp_axpy(std::span<std::uint32_t> dst, std::uint32_t c,
             std::span<const std::uint32_t> src, std::uint32_t p);
void fp_scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
double f64_dot(std::span<const double> x, std::span<const double> y);
void f64_axpy(std::span<double> y, double a, std::span<const double> x);
void f64_rot(std::span<double> x, std::span<double> y, double c, double s);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define BIPROJ_HAVE_AVX2_KERNELS 1
namespace avx2 {
void fp_axpy(std::span<std::uint32_t> dst, std::uint32_t c,
             std::span<const std::uint32_t> src, std::uint32_t p);
void fp_scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
double f64_dot(std::span<const double> x, std::span<const double> y);
void f64_axpy(std::span<double> y, double a, std::span<const double> x);
void f64_rot(std::span<double> x, std::span<double> y, double c, double s);
}  // namespace avx2
#else
#define BIPROJ_HAVE_AVX2_KERNELS 0
#endif

}  // namespace biproj::simd
