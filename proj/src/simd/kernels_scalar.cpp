#include "biproj/simd/kernels.hpp"

#include <cassert>
#include <cstddef>

namespace biproj::simd::scalar {

void fp_axpy(std::span<std::uint32_t> dst, std::uint32_t c,
             std::span<const std::uint32_t> src, std::uint32_t p) {
  assert(dst.size() == src.size());
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
  }
}

void fp_scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (auto& v : dst) v = static_cast<std::uint32_t>((cc * v) % p);
}

double f64_dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void f64_axpy(std::span<double> y, double a, std::span<const double> x) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

void f64_rot(std::span<double> x, std::span<double> y, double c, double s) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

}  // namespace biproj::simd::scalar
