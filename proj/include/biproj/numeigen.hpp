#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biproj/elimfglm.hpp"
#include "biproj/multmap.hpp"
#include "biproj/numeric.hpp"

namespace biproj {

/// Univariate polynomial over Q, coefficients from degree 0 upwards.
using QPoly = std::vector<Rational>;

/// det(lambda I - M) by exact Faddeev-LeVerrier. Throws Errc::PrimeFieldEigen
/// for F_p input.
QPoly charpoly(const DenseMatrix& m);
QPoly poly_mul(const QPoly& a, const QPoly& b);
/// Monic gcd.
QPoly poly_gcd(QPoly a, QPoly b);
/// (factor, multiplicity) with pairwise coprime squarefree monic factors.
std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& p);
/// All complex roots of a squarefree polynomial (Aberth iteration).
std::vector<Complex> poly_roots(const QPoly& p);
Rational poly_eval(const QPoly& p, const Rational& x);
std::string poly_string(const QPoly& p, const std::string& var = "lambda");

struct Eigenvalue {
  Complex value;
  int multiplicity = 0;
  std::optional<Rational> exact;  // set when the eigenvalue is rational
};

/// Eigenvalues with algebraic multiplicities (summing to the size of M).
std::vector<Eigenvalue> eigenvalues(const DenseMatrix& m);

inline constexpr double kDefaultEigenTol = 1e-8;

struct RecoveredPoint {
  std::vector<Complex> coords;                 // projective, first nonzero = 1
  std::vector<Complex> chart;                  // z values
  std::optional<std::vector<Rational>> exact;  // projective, when rational
  int multiplicity = 0;
  double residual = 0.0;
  bool real = true;
  bool conjugate_pair = false;
};

struct PointSet {
  std::vector<RecoveredPoint> points;
  BiDegree degree_used;
  std::size_t total_dim = 0;
  std::vector<double> combination;  // c with M_c = sum c_i M_{z_i}
  int attempts = 0;
};

/// Points of pi_b(V(I)) from the maps: exact characteristic polynomial of a
/// random combination M_c, its roots, and for each root the invariant
/// subspace on which every map acts by a single eigenvalue. Residuals are
/// taken on `gb` when given, else as sigma_min(M_i - z_i). Throws
/// Errc::ClusterAmbiguity if three seeds all produce colliding clusters.
PointSet recover_points(const MultMapSet& maps, std::uint64_t seed, double tol = kDefaultEigenTol,
                        const GroebnerBasis* gb = nullptr);

struct CharpolyCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

/// Compares the characteristic polynomial of M with prod (lambda - v)^mu,
/// coefficientwise with relative tolerance tol.
CharpolyCheck charpoly_check(const DenseMatrix& m, const std::vector<std::pair<Complex, int>>& values,
                             double tol = 1e-8);

/// Same check for M_c = sum c_i M_{z_i} against the recovered points, using
/// g'(xi) = sum c_i z_i(xi).
CharpolyCheck charpoly_check(const MultMapSet& maps, const std::vector<Rational>& combination,
                             const PointSet& points, double tol = 1e-8);

}  // namespace biproj
