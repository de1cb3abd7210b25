#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biproj/dense_matrix.hpp"
#include "biproj/multmap.hpp"

namespace biproj {

/// Exponent vector over the chart variables z.
using ZMonomial = std::vector<unsigned>;

enum class ZOrder {
  Lex,        // z_1 > ... > z_n
  DegRevLex,  // total degree, then reverse lexicographic with z_1 > ... > z_n
};

ZOrder parse_zorder(const std::string& name);
std::string zorder_name(ZOrder order);
/// -1, 0, 1 as a < b, a == b, a > b.
int zcompare(ZOrder order, const ZMonomial& a, const ZMonomial& b);

struct ZTerm {
  ZMonomial mono;
  Scalar coef;
};

/// Polynomial in the chart variables, terms in decreasing order.
struct ZPoly {
  std::vector<ZTerm> terms;

  const ZMonomial& leading() const { return terms.front().mono; }
  std::string to_string(const std::vector<std::string>& names) const;
};

struct GroebnerBasis {
  std::vector<std::string> variables;
  ZOrder order = ZOrder::Lex;
  std::vector<ZPoly> elements;              // decreasing leading monomials
  std::vector<ZMonomial> standard_monomials;  // increasing, starts with 1

  std::vector<std::string> element_strings() const;
  std::vector<std::string> standard_strings() const;
};

std::string zmonomial_string(const ZMonomial& m, const std::vector<std::string>& names);

/// "z<j>" for each chart index j.
std::vector<std::string> chart_names(const MultMapSet& maps);

/// FGLM on vectorized products of the maps, with exact incremental
/// elimination. The maps must commute.
GroebnerBasis matrix_fglm(const std::vector<DenseMatrix>& maps, ZOrder order,
                          const std::vector<std::string>& names);
GroebnerBasis matrix_fglm(const MultMapSet& maps, ZOrder order = ZOrder::Lex);

struct VectorFglmResult {
  GroebnerBasis basis;
  bool fell_back = false;
  std::string reason;
};

/// FGLM on M^alpha v for a random vector v. Every element is then checked to
/// vanish on the maps; on failure (or v = 0) matrix_fglm is used instead.
VectorFglmResult randomized_vector_fglm(const std::vector<DenseMatrix>& maps, ZOrder order,
                                        const std::vector<std::string>& names, std::uint64_t seed,
                                        const std::optional<std::vector<Scalar>>& forced_v = std::nullopt);

/// p(M_1, ..., M_n).
DenseMatrix evaluate_at_maps(const ZPoly& p, const std::vector<DenseMatrix>& maps);
bool vanishes_on_maps(const GroebnerBasis& gb, const std::vector<DenseMatrix>& maps);

std::complex<double> evaluate(const ZPoly& p, const std::vector<std::complex<double>>& z);

}  // namespace biproj
