#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "biproj/bipoly.hpp"
#include "biproj/dense_matrix.hpp"

namespace biproj {

struct MacaulayRow {
  std::size_t generator;
  Monomial multiplier;
};

/// Degree-(a,b) piece of an ideal: one row u*f_i per generator f_i with
/// deg f_i <= (a,b) and monomial u of the complementary bidegree. Columns
/// follow monomials_of(degree). The RREF is computed once on first use.
class MacaulayMatrix {
 public:
  MacaulayMatrix(BiDegree degree, std::vector<Monomial> columns, std::vector<MacaulayRow> rows,
                 DenseMatrix coeffs);

  const BiDegree& degree() const noexcept { return degree_; }
  const std::vector<Monomial>& columns() const noexcept { return columns_; }
  const std::vector<MacaulayRow>& rows() const noexcept { return rows_; }
  const DenseMatrix& coeffs() const noexcept { return coeffs_; }

  /// Throws Errc::DegreeMismatch when u is not of this bidegree.
  std::size_t column_of(const Monomial& u) const;
  const RrefResult& reduced() const;
  std::size_t rank() const { return reduced().rank; }
  std::size_t hilbert_value() const { return columns_.size() - rank(); }

 private:
  struct Cache;

  BiDegree degree_;
  std::vector<Monomial> columns_;
  std::vector<MacaulayRow> rows_;
  DenseMatrix coeffs_;
  std::shared_ptr<Cache> cache_;
};

MacaulayMatrix build_macaulay(const BiSystem& sys, const BiDegree& deg);

/// dim (R/I)_{deg}.
std::size_t hilbert_function(const BiSystem& sys, const BiDegree& deg);
/// dim (R/(I, extra))_{deg}. Throws Errc::DegreeTooLarge if deg(extra) is not
/// below deg, Errc::InvalidInput for extra = 0.
std::size_t hilbert_function_with(const BiSystem& sys, const BiPoly& extra, const BiDegree& deg);

/// Monomials of the non-pivot columns: a basis of (R/I)_{deg}.
class QuotientBasis {
 public:
  QuotientBasis() = default;
  explicit QuotientBasis(std::shared_ptr<const MacaulayMatrix> macaulay);

  const BiDegree& degree() const noexcept { return macaulay_->degree(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const MacaulayMatrix& macaulay() const noexcept { return *macaulay_; }
  const FieldSpec& field() const noexcept { return macaulay_->coeffs().field(); }

  /// Coordinates of p modulo I_{deg} on the basis. Throws Errc::DegreeMismatch.
  std::vector<Scalar> normal_form(const BiPoly& p) const;
  /// Column k holds the normal form of polys[k].
  DenseMatrix normal_forms(const std::vector<BiPoly>& polys) const;

 private:
  std::shared_ptr<const MacaulayMatrix> macaulay_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> basis_columns_;
};

QuotientBasis quotient_basis(const BiSystem& sys, const BiDegree& deg);

inline std::vector<Scalar> normal_form(const BiPoly& p, const QuotientBasis& q) {
  return q.normal_form(p);
}

/// Whether (I : g)_{deg} = I_{deg} for g of bidegree (k, 0), decided by
/// HF(deg) == HF(deg + (k,0)) - HF_{R/(I,g)}(deg + (k,0)).
bool colon_piece_equal(const BiSystem& sys, const BiPoly& g, const BiDegree& deg);

}  // namespace biproj
