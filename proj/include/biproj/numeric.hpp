#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace biproj {

using Complex = std::complex<double>;

/// Column-major real matrix.
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[j * rows + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
};

/// Row-major complex matrix.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  Complex& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

struct Svd {
  std::vector<double> sigma;  // decreasing, length cols
  RealMatrix v;               // right singular vectors as columns, same order
};

/// One-sided Jacobi SVD.
Svd jacobi_svd(RealMatrix a);

/// [[Re A, -Im A], [Im A, Re A]].
RealMatrix real_embedding(const ComplexMatrix& a);

/// Orthonormal basis (columns) of the k-dimensional subspace of C^n that the
/// matrix maps closest to zero, from the 2k smallest singular directions of
/// its real embedding.
ComplexMatrix near_kernel(const ComplexMatrix& a, std::size_t k);

/// Smallest singular value.
double sigma_min(const ComplexMatrix& a);

/// Solves a x = b by Gaussian elimination with partial pivoting.
ComplexMatrix solve(ComplexMatrix a, ComplexMatrix b);

ComplexMatrix conjugate_transpose(const ComplexMatrix& a);

}  // namespace biproj
