#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace biproj {

using Rational = mpq_class;

/// Coefficient field descriptor. Prime moduli must be below 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField, ApproxReal };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws Errc::NotPrime when p is not a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec approx_real() { return FieldSpec(Kind::ApproxReal, 0); }

  Kind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_exact() const noexcept { return kind_ != Kind::ApproxReal; }
  bool is_prime() const noexcept { return kind_ == Kind::PrimeField; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 65521;

bool is_prime_u32(std::uint32_t n) noexcept;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;  // a, b < 2^31
  return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}
inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

/// Image of a rational in F_p; throws Errc::InvalidInput when p divides the denominator.
std::uint32_t rational_to_residue(const Rational& q, std::uint32_t p);

/// Element of a FieldSpec. Rationals are canonical (lowest terms, positive
/// denominator); residues lie in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(Rational(0)) {}

  static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
  static Scalar one(const FieldSpec& f) { return from_int(1, f); }
  static Scalar from_int(long v, const FieldSpec& f);
  static Scalar from_rational(const Rational& q, const FieldSpec& f);
  static Scalar from_residue(std::uint32_t r, const FieldSpec& f);
  static Scalar from_double(double d);

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const Rational& rational() const { return std::get<Rational>(v_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
  double real() const { return std::get<double>(v_); }
  double to_double() const;

  /// Multiplicative inverse; throws Errc::SingularMatrix on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Scalar(const FieldSpec& f, std::variant<Rational, std::uint32_t, double> v)
      : field_(f), v_(std::move(v)) {}

  FieldSpec field_;
  std::variant<Rational, std::uint32_t, double> v_;
};

/// Round-to-nearest-even conversion (mpq_get_d truncates).
double nearest_double(const Rational& q);

/// Parses "3", "-7/4" into a canonical rational; throws Errc::SyntaxError.
Rational parse_rational(const std::string& text);

}  // namespace biproj
