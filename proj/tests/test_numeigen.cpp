#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "biproj/admissible.hpp"
#include "biproj/elimfglm.hpp"
#include "biproj/error.hpp"
#include "biproj/numeigen.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace biproj;

namespace {

const FieldSpec Q = FieldSpec::rationals();

MultMapSet running_maps(BiDegree d, const std::string& h) {
  const auto sys = testsys::running_example();
  return build_mult_maps(sys, *is_admissible(sys, d, testsys::poly(sys, h)));
}

std::vector<Rational> values_of(const std::vector<Eigenvalue>& e) {
  std::vector<Rational> out;
  for (const auto& v : e) {
    REQUIRE(v.exact.has_value());
    out.push_back(*v.exact);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int multiplicity_sum(const std::vector<Eigenvalue>& e) {
  int s = 0;
  for (const auto& v : e) s += v.multiplicity;
  return s;
}

}  // namespace

TEST_CASE("characteristic polynomial agrees with determinant evaluations") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 1 + t % 6;
    DenseMatrix m(n, n, Q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, Scalar::from_rational(Rational(d(rng), 1 + t % 3), Q));
    auto p = charpoly(m);
    REQUIRE(p.size() == n + 1);
    CHECK(p.back() == 1);
    for (long x = -3; x <= 3; ++x) {
      auto a = oracle::to_qmat(m);
      for (std::size_t i = 0; i < n; ++i) {
        for (auto& v : a[i]) v = -v;
        a[i][i] += x;
      }
      CHECK(poly_eval(p, Rational(x)) == oracle::det(a));
    }
  }
  CHECK_THROWS_AS(charpoly(DenseMatrix::identity(2, FieldSpec::prime(7))), Error);
}

TEST_CASE("polynomial helpers") {
  // (x - 1)^3 (x - 2)
  QPoly p{Rational(2), Rational(-7), Rational(9), Rational(-5), Rational(1)};
  auto f = squarefree_factorization(p);
  REQUIRE(f.size() == 2);
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  CHECK(f[0].first == QPoly{Rational(-2), Rational(1)});
  CHECK(f[1].first == QPoly{Rational(-1), Rational(1)});
  CHECK(f[1].second == 3);
  CHECK(poly_gcd(p, QPoly{Rational(-1), Rational(0), Rational(1)}) == QPoly{Rational(-1), Rational(1)});
  auto r = poly_roots(QPoly{Rational(1), Rational(0), Rational(1)});
  REQUIRE(r.size() == 2);
  for (auto z : r) CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-12);
  CHECK(poly_string(QPoly{Rational(-1), Rational(1)}) == "lambda - 1");
}

TEST_CASE("eigenvalues of the maps of x1/h") {
  // map of x1/(x0+x1): the ledger records why this is {0, 1/2}
  auto m32 = running_maps({3, 2}, "x0 + x1");
  auto e32 = eigenvalues(m32.maps[0]);
  CHECK(values_of(e32) == std::vector<Rational>{Rational(0), Rational(1, 2)});
  CHECK(multiplicity_sum(e32) == static_cast<int>(m32.dim()));
  auto m24 = running_maps({2, 4}, "x0 + x1");
  auto e24 = eigenvalues(m24.maps[0]);
  CHECK(values_of(e24) == std::vector<Rational>{Rational(1, 2)});
  CHECK(multiplicity_sum(e24) == 5);
  // with h = x0 the same point gives x1/x0 = 1
  auto x0 = running_maps({2, 4}, "x0");
  CHECK(values_of(eigenvalues(x0.maps[0])) == std::vector<Rational>{Rational(1)});
  auto id = eigenvalues(DenseMatrix::identity(4, Q));
  REQUIRE(id.size() == 1);
  CHECK(id[0].multiplicity == 4);
}

TEST_CASE("point recovery on the running example") {
  auto m22 = running_maps({2, 2}, "x0");
  auto gb = matrix_fglm(m22);
  auto ps = recover_points(m22, 1, kDefaultEigenTol, &gb);
  REQUIRE(ps.points.size() == 2);
  int total = 0;
  std::map<std::vector<Rational>, int> found;
  for (const auto& p : ps.points) {
    REQUIRE(p.exact.has_value());
    found[*p.exact] = p.multiplicity;
    total += p.multiplicity;
    CHECK(p.residual < 1e-8);
  }
  CHECK(total == 4);
  CHECK(found[{Rational(1), Rational(1), Rational(1)}] == 3);
  CHECK(found[{Rational(1), Rational(0), Rational(2)}] == 1);
  std::vector<Rational> c;
  for (double v : ps.combination) c.push_back(Rational(v));
  CHECK(charpoly_check(m22, c, ps).ok);
  auto m24 = running_maps({2, 4}, "x0 + x1");
  auto p24 = recover_points(m24, 1);
  REQUIRE(p24.points.size() == 1);
  CHECK(p24.points[0].multiplicity == 5);
  CHECK(*p24.points[0].exact == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("charpoly check") {
  auto m = DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, -1, 2}}, Q);
  CHECK(charpoly_check(m, {{1.0, 3}, {2.0, 1}}).ok);
  CHECK_FALSE(charpoly_check(m, {{1.0, 2}, {2.0, 2}}).ok);
  CHECK(charpoly_check(DenseMatrix::identity(3, Q), {{1.0, 3}}).ok);
}

TEST_CASE("intro systems: diagonal, irrational and complex eigenvalues") {
  auto run = [](const DenseMatrix& a) {
    auto sys = testsys::eigen_system(a);
    auto maps = build_mult_maps(sys, *is_admissible(sys, {1, 1}, testsys::poly(sys, "x0")));
    return recover_points(maps, 3);
  };
  auto diag = run(DenseMatrix::from_rows({{2, 0}, {0, 3}}, Q));
  REQUIRE(diag.points.size() == 2);
  std::vector<double> z;
  for (const auto& p : diag.points) {
    CHECK(p.multiplicity == 1);
    z.push_back(p.chart[0].real());
  }
  std::sort(z.begin(), z.end());
  CHECK(z[0] == doctest::Approx(2));
  CHECK(z[1] == doctest::Approx(3));
  auto irr = run(DenseMatrix::from_rows({{0, 2}, {1, 0}}, Q));
  REQUIRE(irr.points.size() == 2);
  for (const auto& p : irr.points) {
    CHECK_FALSE(p.exact.has_value());
    CHECK(std::abs(std::abs(p.chart[0].real()) - std::sqrt(2.0)) < 1e-10);
  }
  auto cplx = run(DenseMatrix::from_rows({{0, -1}, {1, 0}}, Q));
  REQUIRE(cplx.points.size() == 2);
  for (const auto& p : cplx.points) {
    CHECK_FALSE(p.real);
    CHECK(p.conjugate_pair);
    CHECK(std::abs(std::abs(p.chart[0].imag()) - 1.0) < 1e-10);
  }
  auto nil = run(DenseMatrix::from_rows({{0, 1}, {0, 0}}, Q));
  REQUIRE(nil.points.size() == 1);
  CHECK(nil.points[0].multiplicity == 2);
  CHECK(std::abs(nil.points[0].chart[0]) < 1e-12);
}

TEST_CASE("charpoly of the intro map equals that of A") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto a = testsys::matrix_with_eigenvalues(testsys::distinct_small_integers(5, seed), seed);
    auto sys = testsys::eigen_system(a);
    auto maps = build_mult_maps(sys, *is_admissible(sys, {1, 1}, testsys::poly(sys, "x0")));
    CHECK(charpoly(maps.maps[0]) == charpoly(a));
  }
}
