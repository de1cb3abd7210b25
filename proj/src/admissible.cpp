#include "biproj/admissible.hpp"

#include <algorithm>
#include <random>

#include "biproj/error.hpp"
#include "biproj/macaulay.hpp"

namespace biproj {

BiPoly random_linear_form(const RingDims& dims, const FieldSpec& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Scalar> coeffs;
  do {
    coeffs.clear();
    for (int i = 0; i < dims.nx(); ++i) {
      if (field.is_prime()) {
        std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
        coeffs.push_back(Scalar::from_residue(dist(rng), field));
      } else {
        std::uniform_int_distribution<long> dist(-50, 50);
        coeffs.push_back(Scalar::from_int(dist(rng), field));
      }
    }
  } while (std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_zero(); }));
  return BiPoly::linear_x(dims, coeffs);
}

std::string field_size_warning(const FieldSpec& field) {
  if (field.is_prime() && field.modulus() < 100) {
    return "FieldTooSmall: random linear forms over " + field.name() + " may miss admissible ones";
  }
  return {};
}

std::optional<AdmissibleCertificate> is_admissible(const BiSystem& sys, const BiDegree& deg,
                                                   const std::optional<BiPoly>& h,
                                                   std::uint64_t seed) {
  if (!sys.field.is_exact()) throw Error(Errc::InexactField, "admissibility needs an exact field");
  if (h && (h->is_zero() || !(h->bidegree() == BiDegree{1, 0}))) {
    throw Error(Errc::DegreeMismatch, "admissible form must have bidegree (1,0)");
  }
  if (deg.a < 0 || deg.b < 0 || !sys.max_degree().leq(deg)) return std::nullopt;

  const std::size_t hf = hilbert_function(sys, deg);
  if (hf != hilbert_function(sys, deg + BiDegree{1, 0})) return std::nullopt;

  std::vector<std::string> warnings;
  if (auto w = field_size_warning(sys.field); !w.empty() && !h) warnings.push_back(w);

  const std::size_t attempts = h ? 1 : 3;
  for (std::size_t k = 0; k < attempts; ++k) {
    const BiPoly form = h ? *h : random_linear_form(sys.dims, sys.field, seed + 7919 * k);
    if (hilbert_function_with(sys, form, deg) == 0) {
      return AdmissibleCertificate{deg, form, hf, k + 1, warnings};
    }
  }
  return std::nullopt;
}

std::size_t y_monomial_count(int l, int m) {
  if (l < 0) return 0;
  return binomial(l + m, m);
}

int projection_stab_degree(const BiSystem& sys) {
  int sum_b = 0;
  int max_b = 0;
  for (const auto& d : sys.degrees()) {
    sum_b += d.b;
    max_b = std::max(max_b, d.b);
  }
  return std::max({sum_b - sys.dims.m, max_b, 0});
}

BiDegree macaulay_bound(const BiSystem& sys) {
  BiDegree sum;
  for (const auto& d : sys.degrees()) sum = sum + d;
  const BiDegree lo = sys.max_degree();
  return {std::max({sum.a - sys.dims.n, lo.a, 0}), std::max({sum.b - sys.dims.m, lo.b, 0})};
}

BiDegree koszul_bound(const BiSystem& sys) {
  const int b = projection_stab_degree(sys);
  long long sum = 0;
  for (const auto& d : sys.degrees()) {
    sum += static_cast<long long>(d.a) * static_cast<long long>(y_monomial_count(b - d.b, sys.dims.m));
  }
  const long long a = std::max<long long>({sum - sys.dims.n, sys.max_degree().a, 0});
  return {static_cast<int>(a), b};
}

AdmissibleCertificate find_admissible(const BiSystem& sys, const SearchOptions& options) {
  const BiDegree cap = options.cap.value_or(koszul_bound(sys));
  const BiDegree lo = sys.max_degree();
  int b0 = lo.b;
  if (options.strategy == SearchStrategy::ProjectionStable) b0 = std::max(b0, projection_stab_degree(sys));
  for (int b = b0; b <= cap.b; ++b) {
    for (int a = lo.a; a <= cap.a; ++a) {
      if (auto cert = is_admissible(sys, {a, b}, std::nullopt, options.seed)) return *cert;
    }
  }
  throw Error(Errc::NotFoundBelowCap,
              "no admissible bidegree up to " + cap.to_string() +
                  "; the projection may be positive-dimensional");
}

}  // namespace biproj
