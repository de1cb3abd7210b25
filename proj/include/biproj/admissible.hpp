#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biproj/bipoly.hpp"

namespace biproj {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Witness that `degree` is admissible with admissible linear form `form`.
struct AdmissibleCertificate {
  BiDegree degree;
  BiPoly form;                 // bidegree (1,0)
  std::size_t hf_value = 0;    // HF(a,b) = HF(a+1,b)
  std::size_t seeds_tried = 0;
  std::vector<std::string> warnings;
};

/// Linear form in x with coefficients uniform over F_p, or over [-50, 50] in Q.
BiPoly random_linear_form(const RingDims& dims, const FieldSpec& field, std::uint64_t seed);

/// Warning text when the field is too small for random genericity, else empty.
std::string field_size_warning(const FieldSpec& field);

/// Checks generator degrees <= deg, HF(a,b) = HF(a+1,b) and HF_{R/(I,h)}(a,b) = 0.
/// Without h, up to three random forms are tried.
std::optional<AdmissibleCertificate> is_admissible(const BiSystem& sys, const BiDegree& deg,
                                                   const std::optional<BiPoly>& h = std::nullopt,
                                                   std::uint64_t seed = kDefaultSeed);

enum class SearchStrategy {
  RowMajor,          // b from the max generator y-degree
  ProjectionStable,  // b from projection_stab_degree
};

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::RowMajor;
  std::optional<BiDegree> cap;  // defaults to koszul_bound
  std::uint64_t seed = kDefaultSeed;
};

/// First certificate in the scan (for each b, increasing a), starting at the
/// componentwise max of generator degrees. Throws Errc::NotFoundBelowCap.
AdmissibleCertificate find_admissible(const BiSystem& sys, const SearchOptions& options = {});

/// sum_i (a_i, b_i) - (n, m), clamped below by the max generator degree.
BiDegree macaulay_bound(const BiSystem& sys);
/// b* = max(sum b_i - m, max b_i); a* = max(sum a_i N_{b*-b_i} - n, max a_i).
BiDegree koszul_bound(const BiSystem& sys);
/// max(sum b_i - m, max b_i, 0).
int projection_stab_degree(const BiSystem& sys);

/// Number of degree-l monomials in y0..ym (0 for l < 0).
std::size_t y_monomial_count(int l, int m);

inline constexpr const char* kMacaulayBoundWarning =
    "Macaulay bound is only proven when V(I) is finite; finiteness was not checked";

}  // namespace biproj
