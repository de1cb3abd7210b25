#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace biproj {

/// Bidegree (a, b) = (x-degree, y-degree), partially ordered componentwise.
struct BiDegree {
  int a = 0;
  int b = 0;

  bool leq(const BiDegree& o) const noexcept { return a <= o.a && b <= o.b; }
  BiDegree operator+(const BiDegree& o) const noexcept { return {a + o.a, b + o.b}; }
  BiDegree operator-(const BiDegree& o) const noexcept { return {a - o.a, b - o.b}; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
  std::string to_string() const;
};

/// P^n x P^m: x0..xn, y0..ym.
struct RingDims {
  int n = 0;
  int m = 0;

  int nx() const noexcept { return n + 1; }
  int ny() const noexcept { return m + 1; }
  int nvars() const noexcept { return n + m + 2; }
  friend bool operator==(const RingDims&, const RingDims&) = default;
};

inline constexpr int kMaxVars = 24;

/// Exponent vector over x0..xn, y0..ym. Variable k < n+1 is x_k, otherwise
/// y_{k-n-1}; the index is also the variable's rank in the global order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const RingDims& dims);

  static Monomial from_exponents(const RingDims& dims, const std::vector<int>& xexp,
                                 const std::vector<int>& yexp);
  static Monomial variable(const RingDims& dims, int var);

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  int nvars() const noexcept { return nx_ + ny_; }

  int exp(int var) const noexcept { return e_[static_cast<std::size_t>(var)]; }
  int x(int i) const noexcept { return e_[static_cast<std::size_t>(i)]; }
  int y(int j) const noexcept { return e_[static_cast<std::size_t>(nx_ + j)]; }
  void set_exp(int var, int value);

  BiDegree bidegree() const noexcept;
  int total_degree() const noexcept;

  bool divides(const Monomial& o) const noexcept;
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o) to hold for the quotient o / *this.
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const noexcept;
  Monomial x_part() const;
  Monomial y_part() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.e_ == b.e_;
  }

  /// "x0^2*y1", or "1".
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t nx_ = 0;
  std::uint8_t ny_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Degree-compatible reverse lexicographic or lexicographic order on a
/// ranking of the variables (larger rank = larger variable).
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex };

  /// Degrevlex with y_m > ... > y_0 > x_n > ... > x_0.
  static MonomialOrder drl();
  /// Lex with the same variable ranking.
  static MonomialOrder lex();
  /// rank[v] is the position of variable v (a permutation of 0..nvars-1).
  static MonomialOrder user(Kind kind, std::vector<int> rank);

  Kind kind() const noexcept { return kind_; }
  /// <0, 0, >0 as a is smaller, equal, or larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }
  std::string name() const;

 private:
  MonomialOrder(Kind kind, std::vector<int> rank) : kind_(kind), rank_(std::move(rank)) {}

  int var_at_rank(int r, int nvars) const noexcept;

  Kind kind_ = Kind::DegRevLex;
  std::vector<int> rank_;  // empty means identity
  std::vector<int> by_rank_;
};

/// All monomials of bidegree deg, sorted decreasingly in drl.
std::vector<Monomial> monomials_of(const BiDegree& deg, const RingDims& dims);
/// C(a+n, n) * C(b+m, m), or 0 for negative degrees.
std::size_t count_monomials(const BiDegree& deg, const RingDims& dims);
std::size_t binomial(int n, int k);

}  // namespace biproj
