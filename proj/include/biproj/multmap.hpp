#pragma once

#include <vector>

#include "biproj/admissible.hpp"
#include "biproj/dense_matrix.hpp"
#include "biproj/gb.hpp"
#include "biproj/macaulay.hpp"

namespace biproj {

/// Matrix of [f] -> [g f] from (R/I)_{a,b} to (R/I)_{a+k,b}.
struct BarMap {
  BiPoly g;
  QuotientBasis source;
  QuotientBasis target;
  DenseMatrix matrix;  // |target| x |source|
};

BarMap bar_map(const BiSystem& sys, const BiPoly& g, const QuotientBasis& source,
               const QuotientBasis& target);

/// Multiplication by g / h^k on (R/I)_{cert.degree}, k = deg_x g, with h =
/// cert.form. Column u holds the coordinates of (g/h^k)*u. Throws
/// Errc::SingularBar when the map of h^k is not invertible.
DenseMatrix mult_map(const BiSystem& sys, const AdmissibleCertificate& cert, const BiPoly& g);

/// Maps of the chart variables z_j = x_j / h, j != h_index, where h_index is
/// the first x-variable with a nonzero coefficient in h.
struct MultMapSet {
  BiDegree degree;
  BiPoly h;
  QuotientBasis basis;
  std::vector<int> chart_indices;
  int h_index = 0;
  std::vector<DenseMatrix> maps;

  std::size_t dim() const { return basis.size(); }
  const FieldSpec& field() const { return basis.field(); }
};

/// Throws Errc::SingularBar, or Errc::CommutationFailure if two maps do not
/// commute.
MultMapSet build_mult_maps(const BiSystem& sys, const AdmissibleCertificate& cert);

/// Same matrix as mult_map with normal forms taken by Groebner reduction.
/// Throws Errc::BasisMismatch when the standard monomials differ from the
/// Macaulay quotient basis.
DenseMatrix mult_map_from_gb(const GroebnerBasisBigraded& gb, const AdmissibleCertificate& cert,
                             const BiPoly& g);

/// Projective point with chart coordinates z, scaled so that h(xi) = 1.
std::vector<Scalar> lift_chart_point(const MultMapSet& maps, const std::vector<Scalar>& z);

}  // namespace biproj
