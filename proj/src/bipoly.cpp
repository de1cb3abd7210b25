#include "biproj/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "biproj/error.hpp"

namespace biproj {
namespace {

struct DrlGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    static const MonomialOrder order = MonomialOrder::drl();
    return order.greater(a, b);
  }
};

using TermMap = std::map<Monomial, Scalar, DrlGreater>;

void accumulate(TermMap& acc, const Monomial& mono, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::vector<Term> to_terms(const TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [mono, c] : acc) out.push_back({mono, c});
  return out;
}

void require_bihomogeneous(const std::vector<Term>& terms) {
  std::set<BiDegree> seen;
  for (const auto& t : terms) seen.insert(t.mono.bidegree());
  if (seen.size() > 1) {
    std::string list;
    for (const auto& d : seen) list += (list.empty() ? "" : ", ") + d.to_string();
    throw Error(Errc::NotBihomogeneous, "mixed bidegrees " + list);
  }
}

}  // namespace

BiPoly BiPoly::from_terms(const RingDims& dims, const FieldSpec& field, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (!(t.coef.field() == field)) throw Error(Errc::InvalidInput, "term field mismatch");
    accumulate(acc, t.mono, t.coef);
  }
  BiPoly f(dims, field);
  f.terms_ = to_terms(acc);
  require_bihomogeneous(f.terms_);
  return f;
}

BiPoly BiPoly::monomial(const RingDims& dims, const Monomial& mono, const Scalar& coef) {
  BiPoly f(dims, coef.field());
  if (!coef.is_zero()) f.terms_.push_back({mono, coef});
  return f;
}

BiPoly BiPoly::constant(const RingDims& dims, const Scalar& c) {
  return monomial(dims, Monomial(dims), c);
}

BiPoly BiPoly::linear_x(const RingDims& dims, const std::vector<Scalar>& coeffs) {
  if (static_cast<int>(coeffs.size()) != dims.nx()) throw Error(Errc::InvalidInput, "linear form length");
  std::vector<Term> terms;
  for (int i = 0; i < dims.nx(); ++i) {
    terms.push_back({Monomial::variable(dims, i), coeffs[static_cast<std::size_t>(i)]});
  }
  return from_terms(dims, coeffs.front().field(), std::move(terms));
}

BiDegree BiPoly::bidegree() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "zero polynomial has no bidegree");
  return terms_.front().mono.bidegree();
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

BiPoly BiPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return BiPoly(dims_, field_);
  BiPoly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

BiPoly BiPoly::times_monomial(const Monomial& u) const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * u;
  return r;  // multiplication by a monomial preserves the order
}

BiPoly BiPoly::pow(int e) const {
  BiPoly r = constant(dims_, Scalar::one(field_));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  TermMap acc;
  for (const auto& t : f.terms_) accumulate(acc, t.mono, t.coef);
  for (const auto& t : g.terms_) accumulate(acc, t.mono, t.coef);
  BiPoly r(f.dims_, f.field_);
  r.terms_ = to_terms(acc);
  require_bihomogeneous(r.terms_);
  return r;
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
  TermMap acc;
  for (const auto& s : f.terms_)
    for (const auto& t : g.terms_) accumulate(acc, s.mono * t.mono, s.coef * t.coef);
  BiPoly r(f.dims_, f.field_);
  r.terms_ = to_terms(acc);
  return r;
}

bool operator==(const BiPoly& f, const BiPoly& g) {
  if (!(f.field_ == g.field_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (!(f.terms_[i].mono == g.terms_[i].mono) || !(f.terms_[i].coef == g.terms_[i].coef)) return false;
  }
  return true;
}

Scalar BiPoly::coefficient(const Monomial& u) const {
  for (const auto& t : terms_) {
    if (t.mono == u) return t.coef;
  }
  return Scalar::zero(field_);
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    std::string c = t.coef.to_string();
    bool negative = false;
    if (field_.is_rational() && sgn(t.coef.rational()) < 0) {
      negative = true;
      c = Rational(-t.coef.rational()).get_str();
    }
    const bool unit = c == "1";
    const bool is_const = t.mono.total_degree() == 0;
    std::string body;
    if (is_const) {
      body = c;
    } else if (unit) {
      body = t.mono.to_string();
    } else {
      body = c + "*" + t.mono.to_string();
    }
    if (s.empty()) {
      s = negative ? "-" + body : body;
    } else {
      s += negative ? " - " : " + ";
      s += body;
    }
  }
  return s;
}

std::vector<BiDegree> BiSystem::degrees() const {
  std::vector<BiDegree> out;
  for (const auto& g : generators) out.push_back(g.bidegree());
  return out;
}

BiDegree BiSystem::max_degree() const {
  BiDegree d;
  for (const auto& g : generators) {
    const BiDegree e = g.bidegree();
    d.a = std::max(d.a, e.a);
    d.b = std::max(d.b, e.b);
  }
  return d;
}

BiSystem BiSystem::with_generator(const BiPoly& extra) const {
  BiSystem s = *this;
  s.generators.push_back(extra);
  return s;
}

BiSystem BiSystem::over(const FieldSpec& target) const {
  if (target == field) return *this;
  if (!field.is_rational() || !target.is_exact()) {
    throw Error(Errc::InvalidInput, "cannot map " + field.name() + " into " + target.name());
  }
  BiSystem s{dims, target, {}};
  for (const auto& g : generators) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({t.mono, Scalar::from_rational(t.coef.rational(), target)});
    BiPoly image = BiPoly::from_terms(dims, target, std::move(terms));
    if (!image.is_zero()) s.generators.push_back(std::move(image));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing: recursive descent over an unrestricted term map; the bihomogeneity
// check happens once at the end.

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingDims& dims, const FieldSpec& field)
      : s_(text), dims_(dims), field_(field) {}

  TermMap parse() {
    TermMap r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TermMap expr() {
    TermMap acc;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    add_into(acc, term(), negate);
    while (true) {
      if (eat('+')) add_into(acc, term(), false);
      else if (eat('-')) add_into(acc, term(), true);
      else break;
    }
    return acc;
  }

  void add_into(TermMap& acc, const TermMap& t, bool negate) {
    for (const auto& [mono, c] : t) accumulate(acc, mono, negate ? -c : c);
  }

  TermMap term() {
    TermMap acc = power();
    while (true) {
      if (eat('*')) {
        acc = mul(acc, power());
      } else if (eat('/')) {
        const TermMap d = power();
        if (d.size() != 1 || d.begin()->first.total_degree() != 0) fail("division by a non-constant");
        const Scalar inv = d.begin()->second.inverse();
        for (auto& [mono, c] : acc) c *= inv;
      } else {
        break;
      }
    }
    return acc;
  }

  TermMap power() {
    TermMap base = atom();
    if (eat('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      TermMap r = constant_map(Scalar::one(field_));
      for (int i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  TermMap atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TermMap r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      TermMap r = atom();
      for (auto& [mono, v] : r) v = -v;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant_map(Scalar::from_rational(parse_rational(s_.substr(start, pos_ - start)), field_));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("variable index expected");
      const int idx = std::stoi(s_.substr(start, pos_ - start));
      const int limit = c == 'x' ? dims_.n : dims_.m;
      if (idx > limit) fail(std::string(1, c) + std::to_string(idx) + " outside the ring");
      const int var = c == 'x' ? idx : dims_.nx() + idx;
      TermMap r;
      r.emplace(Monomial::variable(dims_, var), Scalar::one(field_));
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  TermMap constant_map(const Scalar& v) {
    TermMap r;
    if (!v.is_zero()) r.emplace(Monomial(dims_), v);
    return r;
  }

  TermMap mul(const TermMap& a, const TermMap& b) {
    TermMap r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) accumulate(r, ma * mb, ca * cb);
    return r;
  }

  std::string s_;
  std::size_t pos_ = 0;
  RingDims dims_;
  FieldSpec field_;
};

}  // namespace

BiPoly parse_poly(const std::string& text, const RingDims& dims, const FieldSpec& field) {
  if (!field.is_exact()) throw Error(Errc::InexactField, "systems must be over Q or F_p");
  Parser parser(text, dims, field);
  const TermMap acc = parser.parse();
  std::vector<Term> terms = to_terms(acc);
  require_bihomogeneous(terms);
  return BiPoly::from_terms(dims, field, std::move(terms));
}

std::vector<Scalar> normalize_point(std::span<const Scalar> xi) {
  auto it = std::find_if(xi.begin(), xi.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == xi.end()) throw Error(Errc::ZeroPoint, "all coordinates vanish");
  const Scalar inv = it->inverse();
  std::vector<Scalar> out;
  for (const auto& s : xi) out.push_back(s * inv);
  return out;
}

BiPoly specialize_x(const BiPoly& f, std::span<const Scalar> xi) {
  if (static_cast<int>(xi.size()) != f.dims().nx()) {
    throw Error(Errc::InvalidInput, "point has " + std::to_string(xi.size()) + " coordinates");
  }
  if (std::all_of(xi.begin(), xi.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw Error(Errc::ZeroPoint, "all coordinates vanish");
  }
  const FieldSpec& field = xi.front().field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Scalar c = t.coef.field() == field ? t.coef : Scalar::from_rational(t.coef.rational(), field);
    for (int i = 0; i < f.dims().nx(); ++i) {
      for (int e = 0; e < t.mono.x(i); ++e) c *= xi[static_cast<std::size_t>(i)];
    }
    terms.push_back({t.mono.y_part(), c});
  }
  return BiPoly::from_terms(f.dims(), field, std::move(terms));
}

BiPoly substitute_linear(const BiPoly& f, const DenseMatrix& tx, const DenseMatrix& ty) {
  const RingDims& dims = f.dims();
  const FieldSpec& field = f.field();
  auto image_of = [&](int var) {
    const bool is_x = var < dims.nx();
    const DenseMatrix& t = is_x ? tx : ty;
    if (t.rows() == 0) return BiPoly::monomial(dims, Monomial::variable(dims, var), Scalar::one(field));
    const int i = is_x ? var : var - dims.nx();
    const int offset = is_x ? 0 : dims.nx();
    std::vector<Term> terms;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      terms.push_back({Monomial::variable(dims, offset + static_cast<int>(j)), t.at(static_cast<std::size_t>(i), j)});
    }
    return BiPoly::from_terms(dims, field, std::move(terms));
  };
  std::vector<BiPoly> images;
  for (int v = 0; v < dims.nvars(); ++v) images.push_back(image_of(v));
  BiPoly out(dims, field);
  for (const auto& t : f.terms()) {
    BiPoly prod = BiPoly::constant(dims, t.coef);
    for (int v = 0; v < dims.nvars(); ++v) {
      for (int e = 0; e < t.mono.exp(v); ++e) prod = prod * images[static_cast<std::size_t>(v)];
    }
    out = out + prod;
  }
  return out;
}

DenseMatrix random_invertible(std::size_t n, const FieldSpec& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseMatrix t(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (field.is_prime()) {
        std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
        t.set(i, j, Scalar::from_residue(dist(rng), field));
      } else {
        std::uniform_int_distribution<long> dist(-9, 9);
        t.set(i, j, Scalar::from_int(dist(rng), field));
      }
    }
  }
  return t;
}

CoordChange change_coords_x(const BiSystem& sys, std::uint64_t seed, CoordChangeMode mode) {
  if (!sys.field.is_exact()) throw Error(Errc::InexactField, "coordinate change needs an exact field");
  const auto n = static_cast<std::size_t>(sys.dims.nx());
  if (mode == CoordChangeMode::Identity) return {sys, DenseMatrix::identity(n, sys.field)};
  for (std::uint64_t attempt = 0; attempt < 5; ++attempt) {
    DenseMatrix t = random_invertible(n, sys.field, seed + attempt);
    if (rank(t) < n) continue;
    BiSystem out{sys.dims, sys.field, {}};
    for (const auto& g : sys.generators) out.generators.push_back(substitute_linear(g, t, DenseMatrix()));
    return {std::move(out), std::move(t)};
  }
  throw Error(Errc::CoordinateChangeFailed, "five sampled matrices were singular");
}

std::complex<double> evaluate(const BiPoly& f, std::span<const std::complex<double>> x,
                              std::span<const std::complex<double>> y) {
  std::complex<double> sum = 0.0;
  for (const auto& t : f.terms()) {
    std::complex<double> v = t.coef.to_double();
    for (int i = 0; i < f.dims().nx(); ++i) v *= std::pow(x[static_cast<std::size_t>(i)], t.mono.x(i));
    for (int j = 0; j < f.dims().ny(); ++j) v *= std::pow(y[static_cast<std::size_t>(j)], t.mono.y(j));
    sum += v;
  }
  return sum;
}

}  // namespace biproj
