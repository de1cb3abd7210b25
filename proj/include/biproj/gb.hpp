#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biproj/bipoly.hpp"

namespace biproj {

/// Reduced, monic Groebner basis of a bihomogeneous ideal. `elements[i]` has
/// leading monomial `leading[i]` under `order`.
struct GroebnerBasisBigraded {
  MonomialOrder order = MonomialOrder::drl();
  RingDims dims;
  FieldSpec field;
  std::vector<BiPoly> elements;
  std::vector<Monomial> leading;
};

/// Buchberger with Gebauer-Moeller pair elimination; pairs are taken by
/// (total degree of lcm, lcm in the order).
GroebnerBasisBigraded buchberger(const BiSystem& sys,
                                 const MonomialOrder& order = MonomialOrder::drl());

/// Fully reduced remainder of f modulo the basis.
BiPoly reduce(const GroebnerBasisBigraded& gb, const BiPoly& f);

/// Re-checks that every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasisBigraded& gb);

/// Monomials of bidegree deg not divisible by any leading monomial, in the
/// drl column order.
std::vector<Monomial> standard_monomials(const GroebnerBasisBigraded& gb, const BiDegree& deg);

/// Hilbert function of R/(monomial ideal) by staircase counting.
std::size_t hilbert_from_leading(const std::vector<Monomial>& leading, const BiDegree& deg,
                                 const RingDims& dims);

struct BiginGenerator {
  Monomial monomial;
  BiDegree degree;
};

struct BiginResult {
  std::vector<BiginGenerator> generators;  // majority outcome
  bool stable = true;                      // all seeds agreed
  std::vector<std::vector<BiginGenerator>> per_seed;
  std::vector<std::string> warnings;
};

inline constexpr int kBiginSeeds = 3;

/// Leading monomials of the reduced drl basis after independent random
/// linear changes of the x- and y-variables over F_p (a Q system is reduced
/// mod 65521). With generic = false no change is applied.
BiginResult bigin(const BiSystem& sys, std::uint64_t seed, bool generic = true);

/// Sorted distinct bidegrees of the generators.
std::vector<BiDegree> bigin_degrees(const BiginResult& r);

struct AdmissibleProbe {
  BiDegree degree;
  bool admissible = false;
};

struct ConsistencyViolation {
  BiDegree probe;
  BiDegree generator;
};

struct ConsistencyReport {
  bool consistent = true;
  /// Probes (a,b) admissible for every tested (a,b'), b' >= b.
  std::vector<BiDegree> checked;
  std::vector<ConsistencyViolation> violations;
  std::string status;
};

/// For every checked probe (a,b), asserts that no bigin generator has
/// bidegree (a+1, b).
ConsistencyReport consistency_report(const std::vector<AdmissibleProbe>& probes,
                         const std::vector<BiDegree>& bigin_degrees);

}  // namespace biproj
