#include "biproj/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "biproj/error.hpp"

namespace biproj {

std::string BiDegree::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Monomial::Monomial(const RingDims& dims) {
  if (dims.n < 0 || dims.m < 0 || dims.nvars() > kMaxVars) {
    throw Error(Errc::InvalidInput, "ring dimensions out of range");
  }
  nx_ = static_cast<std::uint8_t>(dims.nx());
  ny_ = static_cast<std::uint8_t>(dims.ny());
}

Monomial Monomial::from_exponents(const RingDims& dims, const std::vector<int>& xexp,
                                  const std::vector<int>& yexp) {
  Monomial mono(dims);
  if (static_cast<int>(xexp.size()) != dims.nx() || static_cast<int>(yexp.size()) != dims.ny()) {
    throw Error(Errc::InvalidInput, "exponent vector length mismatch");
  }
  for (int i = 0; i < dims.nx(); ++i) mono.set_exp(i, xexp[static_cast<std::size_t>(i)]);
  for (int j = 0; j < dims.ny(); ++j) mono.set_exp(dims.nx() + j, yexp[static_cast<std::size_t>(j)]);
  return mono;
}

Monomial Monomial::variable(const RingDims& dims, int var) {
  Monomial mono(dims);
  mono.set_exp(var, 1);
  return mono;
}

void Monomial::set_exp(int var, int value) {
  if (var < 0 || var >= nvars() || value < 0 || value > 0xFFFF) {
    throw Error(Errc::InvalidInput, "exponent out of range");
  }
  e_[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(value);
}

BiDegree Monomial::bidegree() const noexcept {
  BiDegree d;
  for (int i = 0; i < nx_; ++i) d.a += e_[static_cast<std::size_t>(i)];
  for (int j = nx_; j < nx_ + ny_; ++j) d.b += e_[static_cast<std::size_t>(j)];
  return d;
}

int Monomial::total_degree() const noexcept {
  return std::accumulate(e_.begin(), e_.begin() + nvars(), 0);
}

bool Monomial::divides(const Monomial& o) const noexcept {
  for (int k = 0; k < nvars(); ++k) {
    if (e_[static_cast<std::size_t>(k)] > o.e_[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (int k = 0; k < nvars(); ++k) {
    r.set_exp(k, exp(k) + o.exp(k));
  }
  return r;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r = *this;
  for (int k = 0; k < nvars(); ++k) {
    r.e_[static_cast<std::size_t>(k)] =
        static_cast<std::uint16_t>(o.e_[static_cast<std::size_t>(k)] - e_[static_cast<std::size_t>(k)]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r = *this;
  for (int k = 0; k < nvars(); ++k) {
    r.e_[static_cast<std::size_t>(k)] =
        std::max(e_[static_cast<std::size_t>(k)], o.e_[static_cast<std::size_t>(k)]);
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (int k = 0; k < nvars(); ++k) {
    if (e_[static_cast<std::size_t>(k)] != 0 && o.e_[static_cast<std::size_t>(k)] != 0) return false;
  }
  return true;
}

Monomial Monomial::x_part() const {
  Monomial r = *this;
  for (int j = nx_; j < nvars(); ++j) r.e_[static_cast<std::size_t>(j)] = 0;
  return r;
}

Monomial Monomial::y_part() const {
  Monomial r = *this;
  for (int i = 0; i < nx_; ++i) r.e_[static_cast<std::size_t>(i)] = 0;
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (int k = 0; k < nvars(); ++k) {
    const int e = exp(k);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += k < nx_ ? "x" + std::to_string(k) : "y" + std::to_string(k - nx_);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nx_ * 31u + ny_;
  for (int k = 0; k < nvars(); ++k) h = h * 1000003u ^ e_[static_cast<std::size_t>(k)];
  return h;
}

MonomialOrder MonomialOrder::drl() { return MonomialOrder(Kind::DegRevLex, {}); }
MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex, {}); }

MonomialOrder MonomialOrder::user(Kind kind, std::vector<int> rank) {
  std::vector<int> sorted = rank;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) throw Error(Errc::InvalidInput, "variable ranking is not a permutation");
  }
  MonomialOrder order(kind, rank);
  order.by_rank_.assign(rank.size(), 0);
  for (std::size_t v = 0; v < rank.size(); ++v) order.by_rank_[static_cast<std::size_t>(rank[v])] = static_cast<int>(v);
  return order;
}

int MonomialOrder::var_at_rank(int r, int nvars) const noexcept {
  if (by_rank_.empty() || static_cast<int>(by_rank_.size()) != nvars) return r;
  return by_rank_[static_cast<std::size_t>(r)];
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const int nv = a.nvars();
  if (kind_ == Kind::DegRevLex) {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Smallest variable first: the larger exponent there makes the monomial smaller.
    for (int r = 0; r < nv; ++r) {
      const int v = var_at_rank(r, nv);
      if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? -1 : 1;
    }
    return 0;
  }
  for (int r = nv - 1; r >= 0; --r) {
    const int v = var_at_rank(r, nv);
    if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  const bool custom = !rank_.empty();
  if (kind_ == Kind::DegRevLex) return custom ? "drl(user)" : "drl";
  return custom ? "lex(user)" : "lex";
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::size_t count_monomials(const BiDegree& deg, const RingDims& dims) {
  if (deg.a < 0 || deg.b < 0) return 0;
  return binomial(deg.a + dims.n, dims.n) * binomial(deg.b + dims.m, dims.m);
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of(const BiDegree& deg, const RingDims& dims) {
  std::vector<Monomial> out;
  if (deg.a < 0 || deg.b < 0) return out;
  std::vector<std::vector<int>> xs, ys;
  std::vector<int> cur;
  compositions(deg.a, dims.nx(), cur, [&](const std::vector<int>& v) { xs.push_back(v); });
  compositions(deg.b, dims.ny(), cur, [&](const std::vector<int>& v) { ys.push_back(v); });
  out.reserve(xs.size() * ys.size());
  for (const auto& xe : xs)
    for (const auto& ye : ys) out.push_back(Monomial::from_exponents(dims, xe, ye));
  const MonomialOrder order = MonomialOrder::drl();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& l, const Monomial& r) { return order.greater(l, r); });
  return out;
}

}  // namespace biproj
