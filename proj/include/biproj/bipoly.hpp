#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biproj/dense_matrix.hpp"
#include "biproj/field.hpp"
#include "biproj/monomial.hpp"

namespace biproj {

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Bihomogeneous polynomial: nonzero terms sharing one bidegree, kept sorted
/// decreasingly in the drl order.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const RingDims& dims, const FieldSpec& field) : dims_(dims), field_(field) {}

  /// Combines like terms and drops zeros; throws Errc::NotBihomogeneous.
  static BiPoly from_terms(const RingDims& dims, const FieldSpec& field, std::vector<Term> terms);
  static BiPoly monomial(const RingDims& dims, const Monomial& mono, const Scalar& coef);
  static BiPoly constant(const RingDims& dims, const Scalar& c);
  /// sum_i coeffs[i] * x_i.
  static BiPoly linear_x(const RingDims& dims, const std::vector<Scalar>& coeffs);

  const RingDims& dims() const noexcept { return dims_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Throws Errc::InvalidInput on the zero polynomial.
  BiDegree bidegree() const;

  BiPoly operator-() const;
  BiPoly scaled(const Scalar& c) const;
  BiPoly times_monomial(const Monomial& u) const;
  BiPoly pow(int e) const;

  friend BiPoly operator+(const BiPoly& f, const BiPoly& g);
  friend BiPoly operator-(const BiPoly& f, const BiPoly& g) { return f + (-g); }
  friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
  friend bool operator==(const BiPoly& f, const BiPoly& g);

  /// Coefficient of u (zero when absent).
  Scalar coefficient(const Monomial& u) const;

  /// "2*x0 - x1 - x2" style rendering.
  std::string to_string() const;

 private:
  RingDims dims_;
  FieldSpec field_;
  std::vector<Term> terms_;
};

struct BiSystem {
  RingDims dims;
  FieldSpec field;
  std::vector<BiPoly> generators;

  std::vector<BiDegree> degrees() const;
  /// Componentwise maximum of the generator bidegrees ((0,0) with no generators).
  BiDegree max_degree() const;
  BiSystem with_generator(const BiPoly& extra) const;
  /// Same generators with coefficients mapped into another exact field.
  BiSystem over(const FieldSpec& target) const;
};

/// Parses an expression in x0..xn, y0..ym with + - * ^ / and parentheses.
/// Division is only by nonzero constants. Throws Errc::SyntaxError or
/// Errc::NotBihomogeneous.
BiPoly parse_poly(const std::string& text, const RingDims& dims, const FieldSpec& field);

/// Substitutes the x-variables by the point xi; the result only involves y.
/// Throws Errc::ZeroPoint.
BiPoly specialize_x(const BiPoly& f, std::span<const Scalar> xi);

/// Image of f under x_i -> sum_j tx(i,j) x_j and y_i -> sum_j ty(i,j) y_j.
/// Either matrix may be empty (identity).
BiPoly substitute_linear(const BiPoly& f, const DenseMatrix& tx, const DenseMatrix& ty);

enum class CoordChangeMode { Random, Identity };

struct CoordChange {
  BiSystem system;
  DenseMatrix matrix;  // x_i -> sum_j matrix(i,j) x_j
};

/// Random invertible linear change of the x-variables (entries uniform over
/// F_p, or in [-9, 9] over Q). Retries up to 5 seeds, then throws
/// Errc::CoordinateChangeFailed.
CoordChange change_coords_x(const BiSystem& sys, std::uint64_t seed,
                            CoordChangeMode mode = CoordChangeMode::Random);

/// Random invertible (n x n) matrix over an exact field, deterministic in seed.
DenseMatrix random_invertible(std::size_t n, const FieldSpec& field, std::uint64_t seed);

/// Floating evaluation (rational coefficients only).
std::complex<double> evaluate(const BiPoly& f, std::span<const std::complex<double>> x,
                              std::span<const std::complex<double>> y);

/// Scales so the first nonzero coordinate is 1; throws Errc::ZeroPoint.
std::vector<Scalar> normalize_point(std::span<const Scalar> xi);

}  // namespace biproj
