// Compiled with -mavx2 -mfma; only reached through dispatch after a CPU check.
#include "biproj/simd/kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <cstddef>

namespace biproj::simd::avx2 {
namespace {

// Shoup multiplication: for x < p < 2^31 and w = floor(c * 2^32 / p),
// x*c - floor(x*w / 2^32)*p lies in [0, 2p).
inline __m256i mulmod_shoup(__m256i x, __m256i c, __m256i w, __m256i p) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, w), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), w);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  const __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, c), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline __m256i addmod(__m256i a, __m256i b, __m256i p) {
  const __m256i s = _mm256_add_epi32(a, b);
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, p));
}

inline std::uint32_t shoup_word(std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void fp_axpy(std::span<std::uint32_t> dst, std::uint32_t c,
             std::span<const std::uint32_t> src, std::uint32_t p) {
  assert(dst.size() == src.size());
  const std::size_t n = dst.size();
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(shoup_word(c, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i r = addmod(d, mulmod_shoup(x, vc, vw, vp), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), r);
  }
  const std::uint64_t cc = c;
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
}

void fp_scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  const std::size_t n = dst.size();
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(shoup_word(c, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), mulmod_shoup(x, vc, vw, vp));
  }
  const std::uint64_t cc = c;
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((cc * dst[i]) % p);
}

double f64_dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i + 4),
                           _mm256_loadu_pd(y.data() + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void f64_axpy(std::span<double> y, double a, std::span<const double> x) {
  assert(x.size() == y.size());
  const std::size_t n = y.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i));
    _mm256_storeu_pd(y.data() + i, r);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void f64_rot(std::span<double> x, std::span<double> y, double c, double s) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x.data() + i);
    const __m256d yi = _mm256_loadu_pd(y.data() + i);
    _mm256_storeu_pd(x.data() + i, _mm256_fmsub_pd(vc, xi, _mm256_mul_pd(vs, yi)));
    _mm256_storeu_pd(y.data() + i, _mm256_fmadd_pd(vs, xi, _mm256_mul_pd(vc, yi)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

}  // namespace biproj::simd::avx2
