#include "biproj/dense_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "biproj/error.hpp"
#include "biproj/simd/kernels.hpp"

namespace biproj {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field) {
  const std::size_t n = rows * cols;
  switch (field.kind()) {
    case FieldSpec::Kind::Rationals: data_ = std::vector<Rational>(n); break;
    case FieldSpec::Kind::PrimeField: data_ = std::vector<std::uint32_t>(n, 0); break;
    case FieldSpec::Kind::ApproxReal: data_ = std::vector<double>(n, 0.0); break;
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n, const FieldSpec& field) {
  DenseMatrix m(n, n, field);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows,
                                   const FieldSpec& field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  DenseMatrix m(r, c, field);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::InvalidInput, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar::from_int(v, field));
    ++i;
  }
  return m;
}

DenseMatrix DenseMatrix::from_rationals(std::size_t rows, std::size_t cols,
                                        const std::vector<Rational>& entries,
                                        const FieldSpec& field) {
  if (entries.size() != rows * cols) throw Error(Errc::InvalidInput, "entry count mismatch");
  DenseMatrix m(rows, cols, field);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    m.set(k / cols, k % cols, Scalar::from_rational(entries[k], field));
  }
  return m;
}

Scalar DenseMatrix::at(std::size_t i, std::size_t j) const {
  assert(i < rows_ && j < cols_);
  const std::size_t k = i * cols_ + j;
  switch (data_.index()) {
    case 0: return Scalar::from_rational(std::get<0>(data_)[k], field_);
    case 1: return Scalar::from_residue(std::get<1>(data_)[k], field_);
    default: return Scalar::from_double(std::get<2>(data_)[k]);
  }
}

void DenseMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  assert(i < rows_ && j < cols_);
  if (!(v.field() == field_)) throw Error(Errc::InvalidInput, "entry field mismatch");
  const std::size_t k = i * cols_ + j;
  switch (data_.index()) {
    case 0: std::get<0>(data_)[k] = v.rational(); break;
    case 1: std::get<1>(data_)[k] = v.residue(); break;
    default: std::get<2>(data_)[k] = v.real();
  }
}

std::span<Rational> DenseMatrix::rational_row(std::size_t i) {
  return {std::get<0>(data_).data() + i * cols_, cols_};
}
std::span<const Rational> DenseMatrix::rational_row(std::size_t i) const {
  return {std::get<0>(data_).data() + i * cols_, cols_};
}
std::span<std::uint32_t> DenseMatrix::residue_row(std::size_t i) {
  return {std::get<1>(data_).data() + i * cols_, cols_};
}
std::span<const std::uint32_t> DenseMatrix::residue_row(std::size_t i) const {
  return {std::get<1>(data_).data() + i * cols_, cols_};
}
std::span<double> DenseMatrix::real_row(std::size_t i) {
  return {std::get<2>(data_).data() + i * cols_, cols_};
}
std::span<const double> DenseMatrix::real_row(std::size_t i) const {
  return {std::get<2>(data_).data() + i * cols_, cols_};
}

bool DenseMatrix::is_zero() const {
  return std::visit(
      [](const auto& v) {
        return std::all_of(v.begin(), v.end(), [](const auto& x) { return x == 0; });
      },
      data_);
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_, field_);
  std::visit(
      [&](const auto& src) {
        using V = std::decay_t<decltype(src)>;
        auto& dst = std::get<V>(t.data_);
        for (std::size_t i = 0; i < rows_; ++i)
          for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
      },
      data_);
  return t;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::visit(
      [&](auto& v) {
        std::swap_ranges(v.begin() + a * cols_, v.begin() + (a + 1) * cols_, v.begin() + b * cols_);
      },
      data_);
}

namespace {
void check_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field())) {
    throw Error(Errc::InvalidInput, "matrix shape or field mismatch");
  }
}
}  // namespace

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  check_shape(*this, o);
  const std::uint32_t p = field_.modulus();
  switch (data_.index()) {
    case 0: {
      auto& a = std::get<0>(data_);
      const auto& b = std::get<0>(o.data_);
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
      break;
    }
    case 1: {
      auto& a = std::get<1>(data_);
      const auto& b = std::get<1>(o.data_);
      for (std::size_t k = 0; k < a.size(); ++k) a[k] = add_mod(a[k], b[k], p);
      break;
    }
    default: {
      auto& a = std::get<2>(data_);
      const auto& b = std::get<2>(o.data_);
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    }
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  check_shape(*this, o);
  return *this += o.scaled(-Scalar::one(field_));
}

DenseMatrix DenseMatrix::scaled(const Scalar& s) const {
  DenseMatrix r = *this;
  switch (r.data_.index()) {
    case 0:
      for (auto& x : std::get<0>(r.data_)) x *= s.rational();
      break;
    case 1: simd::fp_scale(std::get<1>(r.data_), s.residue(), field_.modulus()); break;
    default:
      for (auto& x : std::get<2>(r.data_)) x *= s.real();
  }
  return r;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw Error(Errc::InvalidInput, "matrix product shape or field mismatch");
  }
  DenseMatrix c(a.rows(), b.cols(), a.field());
  switch (a.field().kind()) {
    case FieldSpec::Kind::Rationals: {
      Rational t;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.rational_row(i);
        const auto ai = a.rational_row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
          if (sgn(ai[k]) == 0) continue;
          const auto bk = b.rational_row(k);
          for (std::size_t j = 0; j < b.cols(); ++j) {
            if (sgn(bk[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), ai[k].get_mpq_t(), bk[j].get_mpq_t());
            ci[j] += t;
          }
        }
      }
      break;
    }
    case FieldSpec::Kind::PrimeField: {
      const std::uint32_t p = a.field().modulus();
      for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.residue_row(i);
        const auto ai = a.residue_row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) simd::fp_axpy(ci, ai[k], b.residue_row(k), p);
      }
      break;
    }
    case FieldSpec::Kind::ApproxReal:
      for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.real_row(i);
        const auto ai = a.real_row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) simd::f64_axpy(ci, ai[k], b.real_row(k));
      }
      break;
  }
  return c;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

namespace {

void require_exact(const DenseMatrix& m, const char* what) {
  if (!m.field().is_exact()) {
    throw Error(Errc::InexactField, std::string(what) + " requires an exact field");
  }
}

// Gauss-Jordan over Q. Only the nonzero positions of the pivot row are
// touched, which keeps Macaulay-style sparse rows cheap.
std::vector<std::size_t> eliminate_rational(DenseMatrix& m, bool full, PivotRule rule) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  Rational inv, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      const Rational& v = m.rational_row(i)[c];
      if (sgn(v) == 0) continue;
      if (rule == PivotRule::FirstNonzero) {
        best = i;
        break;
      }
      if (best == m.rows() ||
          mpz_cmpabs(v.get_num_mpz_t(), m.rational_row(best)[c].get_num_mpz_t()) > 0) {
        best = i;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    auto prow = m.rational_row(r);
    inv = 1 / prow[c];
    support.clear();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (sgn(prow[j]) == 0) continue;
      prow[j] *= inv;
      support.push_back(j);
    }
    for (std::size_t i = full ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.rational_row(i);
      if (sgn(row[c]) == 0) continue;
      const Rational f = row[c];
      for (std::size_t j : support) {
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
        row[j] -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> eliminate_residue(DenseMatrix& m, bool full) {
  const std::uint32_t p = m.field().modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m.residue_row(i)[c] != 0) {
        best = i;
        break;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    auto prow = m.residue_row(r).subspan(c);
    simd::fp_scale(prow, inv_mod(prow[0], p), p);
    for (std::size_t i = full ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.residue_row(i).subspan(c);
      if (row[0] == 0) continue;
      simd::fp_axpy(row, neg_mod(row[0], p), prow, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> eliminate(DenseMatrix& m, bool full, PivotRule rule) {
  if (m.field().is_prime()) return eliminate_residue(m, full);
  return eliminate_rational(m, full, rule);
}

}  // namespace

RrefResult rref(const DenseMatrix& m, PivotRule rule) {
  require_exact(m, "rref");
  RrefResult out{m, {}, 0};
  out.pivots = eliminate(out.reduced, true, rule);
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const DenseMatrix& m) {
  require_exact(m, "rank");
  DenseMatrix w = m;
  return eliminate(w, false, PivotRule::FirstNonzero).size();
}

DenseMatrix inverse(const DenseMatrix& m) {
  require_exact(m, "inverse");
  if (!m.square()) throw Error(Errc::InvalidInput, "inverse of a non-square matrix");
  return solve(m, DenseMatrix::identity(m.rows(), m.field()));
}

DenseMatrix solve(const DenseMatrix& a, const DenseMatrix& b) {
  require_exact(a, "solve");
  if (!a.square() || a.rows() != b.rows() || !(a.field() == b.field())) {
    throw Error(Errc::InvalidInput, "solve shape mismatch");
  }
  const std::size_t n = a.rows();
  DenseMatrix aug(n, n + b.cols(), a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) aug.set(i, n + j, b.at(i, j));
  }
  const auto pivots = eliminate(aug, true, PivotRule::FirstNonzero);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Error(Errc::SingularMatrix,
                "matrix of size " + std::to_string(n) + " is singular");
  }
  DenseMatrix x(n, b.cols(), a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(i, j, aug.at(i, n + j));
  return x;
}

DenseMatrix kernel_basis(const DenseMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  DenseMatrix k(m.cols(), m.cols() - r.rank, m.field());
  std::size_t col = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k.set(f, col, Scalar::one(m.field()));
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Scalar v = r.reduced.at(i, f);
      if (!v.is_zero()) k.set(r.pivots[i], col, -v);
    }
    ++col;
  }
  return k;
}

DenseMatrix to_approx(const DenseMatrix& m) {
  if (m.field().is_prime()) {
    throw Error(Errc::PrimeFieldEigen, "floating conversion is undefined over " + m.field().name());
  }
  if (!m.field().is_exact()) return m;
  DenseMatrix out(m.rows(), m.cols(), FieldSpec::approx_real());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto src = m.rational_row(i);
    auto dst = out.real_row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) dst[j] = nearest_double(src[j]);
  }
  return out;
}

DenseMatrix to_field(const DenseMatrix& m, const FieldSpec& target) {
  if (m.field() == target) return m;
  if (!m.field().is_rational() || !target.is_exact()) {
    throw Error(Errc::InvalidInput, "cannot convert " + m.field().name() + " to " + target.name());
  }
  DenseMatrix out(m.rows(), m.cols(), target);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto src = m.rational_row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(src[j]) != 0) out.set(i, j, Scalar::from_rational(src[j], target));
    }
  }
  return out;
}

}  // namespace biproj
