#include "biproj/field.hpp"

#include <cmath>
#include <sstream>

#include "biproj/error.hpp"

namespace biproj {

bool is_prime_u32(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F_" + std::to_string(p_);
    case Kind::ApproxReal: return "R(double)";
  }
  return "?";
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(Errc::SingularMatrix, "inverse of zero in F_" + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t rational_to_residue(const Rational& q, std::uint32_t p) {
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) {
    throw Error(Errc::InvalidInput,
                "denominator of " + q.get_str() + " vanishes in F_" + std::to_string(p));
  }
  const auto num = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_num_mpz_t(), p));
  return mul_mod(num, inv_mod(static_cast<std::uint32_t>(den), p), p);
}

Scalar Scalar::from_int(long v, const FieldSpec& f) {
  switch (f.kind()) {
    case FieldSpec::Kind::Rationals: return Scalar(f, Rational(v));
    case FieldSpec::Kind::PrimeField: {
      const auto p = static_cast<long>(f.modulus());
      long r = v % p;
      if (r < 0) r += p;
      return Scalar(f, static_cast<std::uint32_t>(r));
    }
    case FieldSpec::Kind::ApproxReal: return Scalar(f, static_cast<double>(v));
  }
  return {};
}

Scalar Scalar::from_rational(const Rational& q, const FieldSpec& f) {
  switch (f.kind()) {
    case FieldSpec::Kind::Rationals: {
      Rational c = q;
      c.canonicalize();
      return Scalar(f, std::move(c));
    }
    case FieldSpec::Kind::PrimeField: return Scalar(f, rational_to_residue(q, f.modulus()));
    case FieldSpec::Kind::ApproxReal: return Scalar(f, nearest_double(q));
  }
  return {};
}

Scalar Scalar::from_residue(std::uint32_t r, const FieldSpec& f) {
  if (!f.is_prime()) throw Error(Errc::InvalidInput, "residue for a non-prime field");
  return Scalar(f, r % f.modulus());
}

Scalar Scalar::from_double(double d) { return Scalar(FieldSpec::approx_real(), d); }

bool Scalar::is_zero() const noexcept {
  switch (v_.index()) {
    case 0: return sgn(std::get<0>(v_)) == 0;
    case 1: return std::get<1>(v_) == 0;
    default: return std::get<2>(v_) == 0.0;
  }
}

bool Scalar::is_one() const noexcept {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 1;
    case 1: return std::get<1>(v_) == 1;
    default: return std::get<2>(v_) == 1.0;
  }
}

double Scalar::to_double() const {
  switch (v_.index()) {
    case 0: return nearest_double(std::get<0>(v_));
    case 1: return static_cast<double>(std::get<1>(v_));
    default: return std::get<2>(v_);
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::SingularMatrix, "division by zero");
  switch (v_.index()) {
    case 0: return Scalar(field_, Rational(1 / std::get<0>(v_)));
    case 1: return Scalar(field_, inv_mod(std::get<1>(v_), field_.modulus()));
    default: return Scalar(field_, 1.0 / std::get<2>(v_));
  }
}

namespace {
void check_same(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw Error(Errc::InvalidInput, "mixed fields " + a.name() + " and " + b.name());
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(field_, o.field_);
  switch (v_.index()) {
    case 0: std::get<0>(v_) += std::get<0>(o.v_); break;
    case 1: std::get<1>(v_) = add_mod(std::get<1>(v_), std::get<1>(o.v_), field_.modulus()); break;
    default: std::get<2>(v_) += std::get<2>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(field_, o.field_);
  switch (v_.index()) {
    case 0: std::get<0>(v_) -= std::get<0>(o.v_); break;
    case 1: std::get<1>(v_) = sub_mod(std::get<1>(v_), std::get<1>(o.v_), field_.modulus()); break;
    default: std::get<2>(v_) -= std::get<2>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(field_, o.field_);
  switch (v_.index()) {
    case 0: std::get<0>(v_) *= std::get<0>(o.v_); break;
    case 1: std::get<1>(v_) = mul_mod(std::get<1>(v_), std::get<1>(o.v_), field_.modulus()); break;
    default: std::get<2>(v_) *= std::get<2>(o.v_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(field_, Rational(-std::get<0>(v_)));
    case 1: return Scalar(field_, neg_mod(std::get<1>(v_), field_.modulus()));
    default: return Scalar(field_, -std::get<2>(v_));
  }
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.v_ == b.v_; }

std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_str();
    case 1: return std::to_string(std::get<1>(v_));
    default: {
      std::ostringstream os;
      os.precision(17);
      os << std::get<2>(v_);
      return os.str();
    }
  }
}

double nearest_double(const Rational& q) {
  if (sgn(q) == 0) return 0.0;
  mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();
  // Choose shift s so that floor(num * 2^s / den) has 54 significant bits,
  // then round the last bit away to nearest-even.
  const long shift = 54 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  mpz_class scaled_num = num, scaled_den = den;
  if (shift >= 0) {
    mpz_mul_2exp(scaled_num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_mul_2exp(scaled_den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  long e = -shift;
  // quo has 54 or 55 bits; reduce to 53 with round-half-even on the dropped bits.
  while (mpz_sizeinbase(quo.get_mpz_t(), 2) > 53) {
    const bool low = mpz_odd_p(quo.get_mpz_t()) != 0;
    mpz_fdiv_q_2exp(quo.get_mpz_t(), quo.get_mpz_t(), 1);
    if (low) rem += scaled_den;
    scaled_den *= 2;
    ++e;
  }
  const int cmp_half = cmp(rem * 2, scaled_den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quo.get_mpz_t()))) ++quo;
  const double mant = quo.get_d();  // exact: at most 2^53
  const double mag = std::ldexp(mant, static_cast<int>(e));
  return sgn(q) < 0 ? -mag : mag;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(Errc::SyntaxError, "bad rational literal '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace biproj
