#include "biproj/multmap.hpp"

#include <memory>

#include "biproj/error.hpp"

namespace biproj {
namespace {

std::vector<BiPoly> shifted_basis(const BiPoly& g, const QuotientBasis& source) {
  std::vector<BiPoly> polys;
  polys.reserve(source.size());
  for (const auto& u : source.basis()) polys.push_back(g.times_monomial(u));
  return polys;
}

int x_degree(const BiPoly& g) {
  const BiDegree d = g.bidegree();
  if (d.b != 0) throw Error(Errc::DegreeMismatch, "multiplier must have bidegree (k,0), got " + d.to_string());
  return d.a;
}

DenseMatrix apply_inverse(const DenseMatrix& bar_hk, const DenseMatrix& bar_g) {
  if (bar_hk.rows() != bar_hk.cols()) {
    throw Error(Errc::SingularBar, "quotient dimensions differ between source and target");
  }
  try {
    return solve(bar_hk, bar_g);
  } catch (const Error& e) {
    if (e.code() != Errc::SingularMatrix) throw;
    throw Error(Errc::SingularBar, "multiplication by h^k is not invertible at this degree");
  }
}

BiPoly x_variable(const RingDims& dims, const FieldSpec& field, int j) {
  return BiPoly::monomial(dims, Monomial::variable(dims, j), Scalar::one(field));
}

}  // namespace

BarMap bar_map(const BiSystem& sys, const BiPoly& g, const QuotientBasis& source,
               const QuotientBasis& target) {
  (void)sys;
  const int k = x_degree(g);
  if (!(target.degree() == source.degree() + BiDegree{k, 0})) {
    throw Error(Errc::DegreeMismatch, "target degree " + target.degree().to_string() +
                                          " is not source degree " + source.degree().to_string() +
                                          " + (" + std::to_string(k) + ",0)");
  }
  return {g, source, target, target.normal_forms(shifted_basis(g, source))};
}

DenseMatrix mult_map(const BiSystem& sys, const AdmissibleCertificate& cert, const BiPoly& g) {
  const int k = x_degree(g);
  const QuotientBasis source = quotient_basis(sys, cert.degree);
  const QuotientBasis target = quotient_basis(sys, cert.degree + BiDegree{k, 0});
  const BiPoly hk = cert.form.pow(static_cast<unsigned>(k));
  return apply_inverse(bar_map(sys, hk, source, target).matrix,
                       bar_map(sys, g, source, target).matrix);
}

MultMapSet build_mult_maps(const BiSystem& sys, const AdmissibleCertificate& cert) {
  MultMapSet set;
  set.degree = cert.degree;
  set.h = cert.form;
  set.basis = quotient_basis(sys, cert.degree);
  const int nx = sys.dims.nx();
  set.h_index = -1;
  for (int j = 0; j < nx; ++j) {
    if (!cert.form.coefficient(Monomial::variable(sys.dims, j)).is_zero()) {
      set.h_index = j;
      break;
    }
  }
  if (set.h_index < 0) throw Error(Errc::InvalidInput, "admissible form is zero");
  for (int j = 0; j < nx; ++j) {
    if (j != set.h_index) set.chart_indices.push_back(j);
  }
  if (set.basis.size() == 0) {
    for (std::size_t i = 0; i < set.chart_indices.size(); ++i) set.maps.emplace_back(0, 0, sys.field);
    return set;
  }
  const QuotientBasis target = quotient_basis(sys, cert.degree + BiDegree{1, 0});
  std::vector<BiPoly> polys = shifted_basis(cert.form, set.basis);
  for (int j : set.chart_indices) {
    for (auto& p : shifted_basis(x_variable(sys.dims, sys.field, j), set.basis)) polys.push_back(std::move(p));
  }
  // one pass of normal forms for h and every x_j
  const DenseMatrix all = target.normal_forms(polys);
  const std::size_t d = set.basis.size();
  const std::size_t t = target.size();
  auto block = [&](std::size_t b) {
    DenseMatrix out(t, d, sys.field);
    for (std::size_t r = 0; r < t; ++r) {
      for (std::size_t c = 0; c < d; ++c) out.set(r, c, all.at(r, b * d + c));
    }
    return out;
  };
  const DenseMatrix bar_h = block(0);
  for (std::size_t i = 0; i < set.chart_indices.size(); ++i) {
    set.maps.push_back(apply_inverse(bar_h, block(i + 1)));
  }
  for (std::size_t i = 0; i < set.maps.size(); ++i) {
    for (std::size_t j = i + 1; j < set.maps.size(); ++j) {
      if (!(set.maps[i] * set.maps[j] == set.maps[j] * set.maps[i])) {
        throw Error(Errc::CommutationFailure, "maps of z" + std::to_string(set.chart_indices[i]) +
                                                  " and z" + std::to_string(set.chart_indices[j]) +
                                                  " do not commute");
      }
    }
  }
  return set;
}

DenseMatrix mult_map_from_gb(const GroebnerBasisBigraded& gb, const AdmissibleCertificate& cert,
                             const BiPoly& g) {
  const int k = x_degree(g);
  const BiDegree src = cert.degree;
  const BiDegree tgt = cert.degree + BiDegree{k, 0};
  const auto std_src = standard_monomials(gb, src);
  const auto std_tgt = standard_monomials(gb, tgt);
  BiSystem sys{gb.dims, gb.field, gb.elements};
  const QuotientBasis qs = quotient_basis(sys, src);
  if (!(std_src == qs.basis())) {
    throw Error(Errc::BasisMismatch, "standard monomials at " + src.to_string() +
                                         " differ from the certificate basis");
  }
  auto matrix_of = [&](const BiPoly& mult) {
    DenseMatrix out(std_tgt.size(), std_src.size(), gb.field);
    for (std::size_t c = 0; c < std_src.size(); ++c) {
      const BiPoly r = reduce(gb, mult.times_monomial(std_src[c]));
      for (std::size_t i = 0; i < std_tgt.size(); ++i) out.set(i, c, r.coefficient(std_tgt[i]));
    }
    return out;
  };
  return apply_inverse(matrix_of(cert.form.pow(static_cast<unsigned>(k))), matrix_of(g));
}

std::vector<Scalar> lift_chart_point(const MultMapSet& maps, const std::vector<Scalar>& z) {
  const FieldSpec& field = z.empty() ? maps.field() : z.front().field();
  const int nx = static_cast<int>(maps.chart_indices.size()) + 1;
  std::vector<Scalar> point(static_cast<std::size_t>(nx), Scalar::zero(field));
  auto coef = [&](int j) {
    Scalar c = maps.h.coefficient(Monomial::variable(maps.h.dims(), j));
    if (field.is_rational() || !c.field().is_rational()) return c;
    return field.is_prime() ? Scalar::from_residue(rational_to_residue(c.rational(), field.modulus()), field)
                            : Scalar::from_double(c.to_double());
  };
  Scalar rest = Scalar::one(field);
  for (std::size_t i = 0; i < maps.chart_indices.size(); ++i) {
    const int j = maps.chart_indices[i];
    point[static_cast<std::size_t>(j)] = z[i];
    rest = rest - coef(j) * z[i];
  }
  point[static_cast<std::size_t>(maps.h_index)] = rest / coef(maps.h_index);
  return point;
}

}  // namespace biproj
