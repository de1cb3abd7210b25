#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "biproj/field.hpp"

namespace biproj {

/// Row-major dense matrix over a FieldSpec. Storage is typed per field so the
/// elimination loops run on contiguous residues / rationals / doubles.
class DenseMatrix {
 public:
  DenseMatrix() : DenseMatrix(0, 0, FieldSpec::rationals()) {}
  DenseMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static DenseMatrix identity(std::size_t n, const FieldSpec& field);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                               const FieldSpec& field);
  static DenseMatrix from_rationals(std::size_t rows, std::size_t cols,
                                    const std::vector<Rational>& entries, const FieldSpec& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);

  std::span<Rational> rational_row(std::size_t i);
  std::span<const Rational> rational_row(std::size_t i) const;
  std::span<std::uint32_t> residue_row(std::size_t i);
  std::span<const std::uint32_t> residue_row(std::size_t i) const;
  std::span<double> real_row(std::size_t i);
  std::span<const double> real_row(std::size_t i) const;

  bool is_zero() const;
  DenseMatrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix scaled(const Scalar& s) const;

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  std::string to_string() const;

 private:
  using Storage = std::variant<std::vector<Rational>, std::vector<std::uint32_t>, std::vector<double>>;

  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  Storage data_;
};

enum class PivotRule {
  FirstNonzero,      // leftmost column, first nonzero row
  LargestNumerator,  // leftmost column, row with the largest |numerator| (Q only)
};

struct RrefResult {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Throws Errc::InexactField over ApproxReal.
RrefResult rref(const DenseMatrix& m, PivotRule rule = PivotRule::FirstNonzero);
/// Rank via forward elimination only.
std::size_t rank(const DenseMatrix& m);
/// Throws Errc::SingularMatrix if m is not invertible.
DenseMatrix inverse(const DenseMatrix& m);
/// Columns form a basis of the right null space (cols - rank of them).
DenseMatrix kernel_basis(const DenseMatrix& m);
/// Solves a * x = b for square invertible a.
DenseMatrix solve(const DenseMatrix& a, const DenseMatrix& b);
/// Nearest-double image of a rational matrix; rejects prime fields.
DenseMatrix to_approx(const DenseMatrix& m);
/// Reduction of a rational matrix into F_p (or identity when already there).
DenseMatrix to_field(const DenseMatrix& m, const FieldSpec& target);

}  // namespace biproj
