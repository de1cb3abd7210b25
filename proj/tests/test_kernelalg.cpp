#include <doctest.h>

#include <random>

#include "biproj/dense_matrix.hpp"
#include "biproj/error.hpp"
#include "biproj/numeric.hpp"
#include "biproj/simd/kernels.hpp"
#include "oracles.hpp"

using namespace biproj;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F = FieldSpec::prime(65521);

DenseMatrix random_matrix(std::size_t r, std::size_t c, const FieldSpec& f, std::mt19937_64& rng,
                          double zero_fraction = 0.3) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::bernoulli_distribution zero(zero_fraction);
  DenseMatrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!zero(rng)) m.set(i, j, Scalar::from_int(d(rng), f));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(Scalar::from_rational(Rational(2, 4), Q).to_string() == "1/2");
  CHECK((Scalar::from_int(3, F) * Scalar::from_int(3, F).inverse()).is_one());
  CHECK(Scalar::from_int(-1, F).residue() == 65520);
  CHECK(rational_to_residue(Rational(1, 2), 7) == 4);
  CHECK_THROWS_AS(rational_to_residue(Rational(1, 7), 7), Error);
  CHECK_THROWS_AS(FieldSpec::prime(65520), Error);
  CHECK(is_prime_u32(2147483647u));
  CHECK_FALSE(is_prime_u32(1));
  CHECK(nearest_double(Rational(1, 3)) == 0.3333333333333333);
  CHECK(nearest_double(Rational(1, 2)) == 0.5);
  CHECK(parse_rational("-7/4") == Rational(-7, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("rref examples") {
  auto r = rref(DenseMatrix::identity(2, Q));
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  auto z = rref(DenseMatrix(3, 4, Q));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.reduced.is_zero());
  auto m = rref(DenseMatrix::from_rows({{1, 2}, {2, 4}}, Q));
  CHECK(m.rank == 1);
  CHECK(m.pivots == std::vector<std::size_t>{0});
  CHECK(m.reduced == DenseMatrix::from_rows({{1, 2}, {0, 0}}, Q));
  CHECK_THROWS_AS(rref(DenseMatrix(2, 2, FieldSpec::approx_real())), Error);
}

TEST_CASE("inverse examples") {
  CHECK(inverse(DenseMatrix::identity(3, Q)) == DenseMatrix::identity(3, Q));
  auto inv = inverse(DenseMatrix::from_rows({{2, 0}, {0, 4}}, Q));
  CHECK(inv.at(0, 0).rational() == Rational(1, 2));
  CHECK(inv.at(1, 1).rational() == Rational(1, 4));
  CHECK(inv.at(0, 1).is_zero());
  std::mt19937_64 rng(3);
  int tested = 0;
  while (tested < 5) {
    auto a = random_matrix(5, 5, F, rng, 0.0);
    if (rank(a) < 5) continue;
    CHECK(a * inverse(a) == DenseMatrix::identity(5, F));
    ++tested;
  }
  CHECK_THROWS_AS(inverse(DenseMatrix::from_rows({{1, 2}, {2, 4}}, Q)), Error);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(DenseMatrix::identity(3, Q)).cols() == 0);
  auto k = kernel_basis(DenseMatrix(2, 3, Q));
  CHECK(k.cols() == 3);
  CHECK(rank(k) == 3);
  auto row = DenseMatrix::from_rows({{1, 1, 0}}, Q);
  auto kb = kernel_basis(row);
  CHECK(kb.cols() == 2);
  CHECK((row * kb).is_zero());
}

TEST_CASE("nearest-double conversion") {
  auto half = to_approx(DenseMatrix::from_rationals(1, 1, {Rational(1, 2)}, Q));
  CHECK(half.at(0, 0).real() == 0.5);
  auto third = to_approx(DenseMatrix::from_rationals(1, 1, {Rational(1, 3)}, Q));
  CHECK(third.at(0, 0).real() == 0.3333333333333333);
  auto m = DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, -1, 2}}, Q);
  auto d = to_approx(m);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(d.at(i, j).real() == m.at(i, j).rational().get_d());
  CHECK_THROWS_AS(to_approx(DenseMatrix::identity(2, F)), Error);
}

TEST_CASE("rank agrees with an independent oracle and with the transpose") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    auto a = random_matrix(dim(rng), dim(rng), Q, rng, 0.5);
    const auto r = rank(a);
    CHECK(r == oracle::rank(oracle::to_qmat(a)));
    CHECK(r == rank(a.transpose()));
    CHECK(r == rref(a, PivotRule::LargestNumerator).rank);
    auto ap = to_field(a, F);
    CHECK(rank(ap) == rank(ap.transpose()));
    CHECK(rank(ap) <= r);
  }
}

TEST_CASE("rref over F_p is identical on both simd paths") {
  std::mt19937_64 rng(5);
  const auto before = simd::active_isa();
  for (int t = 0; t < 10; ++t) {
    auto a = random_matrix(20, 33, F, rng, 0.2);
    simd::set_active_isa(simd::Isa::Scalar);
    auto s = rref(a);
    simd::set_active_isa(simd::detected_isa());
    auto v = rref(a);
    CHECK(s.reduced == v.reduced);
    CHECK(s.pivots == v.pivots);
  }
  simd::set_active_isa(before);
}

TEST_CASE("solve and kernel on random rational systems") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    auto a = random_matrix(4, 4, Q, rng, 0.1);
    if (rank(a) < 4) continue;
    auto b = random_matrix(4, 2, Q, rng, 0.1);
    CHECK(a * solve(a, b) == b);
    auto c = random_matrix(3, 6, Q, rng, 0.3);
    auto k = kernel_basis(c);
    CHECK(k.cols() == 6 - rank(c));
    CHECK((c * k).is_zero());
  }
}

TEST_CASE("jacobi svd reproduces known singular values") {
  RealMatrix a(3, 2);
  a(0, 0) = 3;
  a(1, 1) = 4;
  auto s = jacobi_svd(a);
  REQUIRE(s.sigma.size() == 2);
  CHECK(s.sigma[0] == doctest::Approx(4));
  CHECK(s.sigma[1] == doctest::Approx(3));
  ComplexMatrix c(2, 2);
  c(0, 0) = Complex(0, 1);
  c(0, 1) = 1;
  c(1, 0) = 1;
  c(1, 1) = Complex(0, -1);
  // rows are i*(1, -i) and (1, -i): rank one
  CHECK(sigma_min(c) < 1e-12);
  auto k = near_kernel(c, 1);
  REQUIRE(k.cols == 1);
  auto r = c * k;
  CHECK(std::abs(r(0, 0)) < 1e-12);
  CHECK(std::abs(r(1, 0)) < 1e-12);
}
