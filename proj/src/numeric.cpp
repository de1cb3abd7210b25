#include "biproj/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "biproj/error.hpp"
#include "biproj/simd/kernels.hpp"

namespace biproj {

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

Svd jacobi_svd(RealMatrix a) {
  const std::size_t m = a.rows;
  const std::size_t n = a.cols;
  RealMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  auto col = [](RealMatrix& x, std::size_t j) {
    return std::span<double>(x.data.data() + j * x.rows, x.rows);
  };
  const double eps = 1e-15;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto ap = col(a, p);
        auto aq = col(a, q);
        const double alpha = simd::f64_dot(ap, ap);
        const double beta = simd::f64_dot(aq, aq);
        const double gamma = simd::f64_dot(ap, aq);
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // (ap, aq) <- (c ap - s aq, s ap + c aq)
        simd::f64_rot(ap, aq, c, s);
        simd::f64_rot(col(v, p), col(v, q), c, s);
      }
    }
    if (!rotated) break;
  }
  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto aj = col(a, j);
    norms[j] = std::sqrt(simd::f64_dot(aj, aj));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });
  Svd out;
  out.v = RealMatrix(n, n);
  (void)m;
  for (std::size_t k = 0; k < n; ++k) {
    out.sigma.push_back(norms[order[k]]);
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, order[k]);
  }
  return out;
}

RealMatrix real_embedding(const ComplexMatrix& a) {
  RealMatrix r(2 * a.rows, 2 * a.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      const Complex z = a(i, j);
      r(i, j) = z.real();
      r(i, j + a.cols) = -z.imag();
      r(i + a.rows, j) = z.imag();
      r(i + a.rows, j + a.cols) = z.real();
    }
  }
  return r;
}

ComplexMatrix near_kernel(const ComplexMatrix& a, std::size_t k) {
  const std::size_t n = a.cols;
  const Svd svd = jacobi_svd(real_embedding(a));
  // candidates from the 2k smallest directions, orthonormalized over C
  ComplexMatrix basis(n, 0);
  std::vector<std::vector<Complex>> kept;
  for (std::size_t idx = 2 * n; idx-- > 2 * n - std::min(2 * k, 2 * n) && kept.size() < k;) {
    std::vector<Complex> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Complex(svd.v(i, idx), svd.v(i + n, idx));
    for (const auto& u : kept) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(u[i]) * w[i];
      for (std::size_t i = 0; i < n; ++i) w[i] -= dot * u[i];
    }
    double norm = 0.0;
    for (const auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (auto& x : w) x /= norm;
    kept.push_back(std::move(w));
  }
  ComplexMatrix out(n, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) out(i, j) = kept[j][i];
  }
  return out;
}

double sigma_min(const ComplexMatrix& a) {
  if (a.cols == 0) return 0.0;
  const Svd svd = jacobi_svd(real_embedding(a));
  return svd.sigma.back();
}

ComplexMatrix solve(ComplexMatrix a, ComplexMatrix b) {
  const std::size_t n = a.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    }
    if (std::abs(a(piv, c)) == 0.0) throw Error(Errc::SingularMatrix, "singular complex system");
    for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
    for (std::size_t j = 0; j < b.cols; ++j) std::swap(b(c, j), b(piv, j));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Complex f = a(r, c) / a(c, c);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
      for (std::size_t j = 0; j < b.cols; ++j) b(r, j) -= f * b(c, j);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < b.cols; ++j) b(r, j) /= a(r, r);
  }
  return b;
}

}  // namespace biproj
