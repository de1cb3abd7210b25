#include "biproj/macaulay.hpp"

#include <mutex>
#include <unordered_map>

#include "biproj/error.hpp"
#include "biproj/simd/kernels.hpp"

namespace biproj {

struct MacaulayMatrix::Cache {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  std::once_flag once;
  RrefResult rref;
};

MacaulayMatrix::MacaulayMatrix(BiDegree degree, std::vector<Monomial> columns,
                               std::vector<MacaulayRow> rows, DenseMatrix coeffs)
    : degree_(degree),
      columns_(std::move(columns)),
      rows_(std::move(rows)),
      coeffs_(std::move(coeffs)),
      cache_(std::make_shared<Cache>()) {
  cache_->index.reserve(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) cache_->index.emplace(columns_[j], j);
}

std::size_t MacaulayMatrix::column_of(const Monomial& u) const {
  const auto it = cache_->index.find(u);
  if (it == cache_->index.end()) {
    throw Error(Errc::DegreeMismatch, u.to_string() + " is not of bidegree " + degree_.to_string());
  }
  return it->second;
}

const RrefResult& MacaulayMatrix::reduced() const {
  std::call_once(cache_->once, [this] { cache_->rref = rref(coeffs_); });
  return cache_->rref;
}

MacaulayMatrix build_macaulay(const BiSystem& sys, const BiDegree& deg) {
  if (!sys.field.is_exact()) throw Error(Errc::InexactField, "Macaulay matrices need an exact field");
  std::vector<Monomial> columns = monomials_of(deg, sys.dims);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t j = 0; j < columns.size(); ++j) index.emplace(columns[j], j);

  std::vector<MacaulayRow> rows;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    const BiDegree d = sys.generators[i].bidegree();
    if (!d.leq(deg)) continue;
    for (const auto& u : monomials_of(deg - d, sys.dims)) rows.push_back({i, u});
  }
  DenseMatrix coeffs(rows.size(), columns.size(), sys.field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& t : sys.generators[rows[r].generator].terms()) {
      coeffs.set(r, index.at(t.mono * rows[r].multiplier), t.coef);
    }
  }
  return MacaulayMatrix(deg, std::move(columns), std::move(rows), std::move(coeffs));
}

std::size_t hilbert_function(const BiSystem& sys, const BiDegree& deg) {
  if (deg.a < 0 || deg.b < 0) return 0;
  const MacaulayMatrix mac = build_macaulay(sys, deg);
  return mac.columns().size() - rank(mac.coeffs());
}

std::size_t hilbert_function_with(const BiSystem& sys, const BiPoly& extra, const BiDegree& deg) {
  if (extra.is_zero()) throw Error(Errc::InvalidInput, "extra generator is zero");
  if (!extra.bidegree().leq(deg)) {
    throw Error(Errc::DegreeTooLarge,
                extra.bidegree().to_string() + " is not below " + deg.to_string());
  }
  return hilbert_function(sys.with_generator(extra), deg);
}

QuotientBasis::QuotientBasis(std::shared_ptr<const MacaulayMatrix> macaulay)
    : macaulay_(std::move(macaulay)) {
  const RrefResult& r = macaulay_->reduced();
  std::vector<bool> pivot(macaulay_->columns().size(), false);
  for (auto c : r.pivots) pivot[c] = true;
  for (std::size_t j = 0; j < pivot.size(); ++j) {
    if (pivot[j]) continue;
    basis_.push_back(macaulay_->columns()[j]);
    basis_columns_.push_back(j);
  }
}

QuotientBasis quotient_basis(const BiSystem& sys, const BiDegree& deg) {
  return QuotientBasis(std::make_shared<const MacaulayMatrix>(build_macaulay(sys, deg)));
}

std::vector<Scalar> QuotientBasis::normal_form(const BiPoly& p) const {
  const DenseMatrix nf = normal_forms({p});
  std::vector<Scalar> out;
  out.reserve(nf.rows());
  for (std::size_t i = 0; i < nf.rows(); ++i) out.push_back(nf.at(i, 0));
  return out;
}

DenseMatrix QuotientBasis::normal_forms(const std::vector<BiPoly>& polys) const {
  const MacaulayMatrix& mac = *macaulay_;
  const RrefResult& r = mac.reduced();
  const FieldSpec& field = mac.coeffs().field();
  const std::size_t ncols = mac.columns().size();
  DenseMatrix out(basis_.size(), polys.size(), field);

  // Each poly becomes a row vector over the columns and is reduced by the
  // RREF rows: pivot columns are cleared, the basis columns hold the answer.
  DenseMatrix work(polys.size(), ncols, field);
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const BiPoly& p = polys[k];
    if (p.is_zero()) continue;
    if (!(p.bidegree() == mac.degree())) {
      throw Error(Errc::DegreeMismatch,
                  "polynomial of bidegree " + p.bidegree().to_string() + " reduced at " +
                      mac.degree().to_string());
    }
    for (const auto& t : p.terms()) {
      const Scalar c = t.coef.field() == field ? t.coef : Scalar::from_rational(t.coef.rational(), field);
      work.set(k, mac.column_of(t.mono), c);
    }
  }
  if (field.is_prime()) {
    const std::uint32_t pmod = field.modulus();
    for (std::size_t k = 0; k < polys.size(); ++k) {
      auto v = work.residue_row(k);
      for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t c = r.pivots[i];
        if (v[c] == 0) continue;
        simd::fp_axpy(v.subspan(c), neg_mod(v[c], pmod), r.reduced.residue_row(i).subspan(c), pmod);
      }
    }
  } else {
    Rational t;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      auto v = work.rational_row(k);
      for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t c = r.pivots[i];
        if (sgn(v[c]) == 0) continue;
        const Rational f = v[c];
        const auto row = r.reduced.rational_row(i);
        for (std::size_t j = c; j < ncols; ++j) {
          if (sgn(row[j]) == 0) continue;
          mpq_mul(t.get_mpq_t(), f.get_mpq_t(), row[j].get_mpq_t());
          v[j] -= t;
        }
      }
    }
  }
  for (std::size_t k = 0; k < polys.size(); ++k) {
    for (std::size_t i = 0; i < basis_columns_.size(); ++i) {
      out.set(i, k, work.at(k, basis_columns_[i]));
    }
  }
  return out;
}

bool colon_piece_equal(const BiSystem& sys, const BiPoly& g, const BiDegree& deg) {
  if (g.is_zero()) throw Error(Errc::InvalidInput, "colon by zero");
  const BiDegree gd = g.bidegree();
  if (gd.b != 0) throw Error(Errc::DegreeMismatch, "g must have bidegree (k,0)");
  const BiDegree shifted = deg + gd;
  const std::size_t hf = hilbert_function(sys, deg);
  const std::size_t hf_shift = hilbert_function(sys, shifted);
  const std::size_t hf_cone = hilbert_function_with(sys, g, shifted);
  // dim (R/(I:g))_{deg} = HF(deg + (k,0)) - HF_{R/(I,g)}(deg + (k,0)), and (I:g) contains I.
  return hf_shift - hf_cone == hf;
}

}  // namespace biproj
