#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biproj/bipoly.hpp"
#include "biproj/numeric.hpp"

namespace biproj {

enum class Verdict { InProjection, NotInProjection };

std::string verdict_name(Verdict v);

struct MembershipReport {
  std::vector<std::string> point;  // normalized coordinates as printed
  int b_used = 0;
  std::size_t rank = 0;
  std::size_t full_rank = 0;  // number of y-monomials of degree b
  Verdict verdict = Verdict::NotInProjection;
  /// Exact: full_rank - rank. Numeric: sigma_{full_rank} / sigma_1.
  double margin = 0.0;
  bool numeric = false;
  double tol = 0.0;
};

inline constexpr double kDefaultVerifyTol = 1e-10;

/// max(sum b_i - m, 0).
int membership_degree(const BiSystem& sys);

/// Rank of the y-Macaulay matrix of the specialized generators at degree b
/// (default membership_degree); xi is in pi(V(I)) iff the rank is deficient.
/// Throws Errc::ZeroPoint.
MembershipReport verify_exact(const BiSystem& sys, std::span<const Scalar> xi,
                              std::optional<int> b = std::nullopt);

/// Same test with floating coefficients; numerical rank counts singular values
/// with sigma_i / sigma_1 >= tol. Complex points use the real embedding.
MembershipReport verify_numeric(const BiSystem& sys, std::span<const Complex> xi,
                                double tol = kDefaultVerifyTol, std::optional<int> b = std::nullopt);

}  // namespace biproj
