#include <doctest.h>

#include "biproj/admissible.hpp"
#include "biproj/elimfglm.hpp"
#include "biproj/multmap.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace biproj;

namespace {

const FieldSpec Q = FieldSpec::rationals();

MultMapSet running_maps(BiDegree d, const std::string& h = "x0") {
  const auto sys = testsys::running_example();
  return build_mult_maps(sys, *is_admissible(sys, d, testsys::poly(sys, h)));
}

// Reduced lex basis of an ideal of points is unique, so comparing strings is exact.
std::vector<std::string> strings(const GroebnerBasis& gb) { return gb.element_strings(); }

}  // namespace

TEST_CASE("orders on chart monomials") {
  CHECK(zcompare(ZOrder::Lex, {1, 0}, {0, 5}) > 0);
  CHECK(zcompare(ZOrder::DegRevLex, {1, 0}, {0, 5}) < 0);
  CHECK(zcompare(ZOrder::DegRevLex, {1, 1}, {2, 0}) < 0);
  CHECK(zcompare(ZOrder::DegRevLex, {1, 1}, {0, 2}) > 0);
  CHECK(zcompare(ZOrder::Lex, {1, 2}, {1, 2}) == 0);
  CHECK(parse_zorder("drl") == ZOrder::DegRevLex);
  CHECK(parse_zorder("lex") == ZOrder::Lex);
  CHECK(zmonomial_string({2, 1}, {"z1", "z2"}) == "z1^2*z2");
  CHECK(zmonomial_string({0, 0}, {"z1", "z2"}) == "1");
}

TEST_CASE("running example lex bases") {
  auto m22 = running_maps({2, 2});
  CHECK(chart_names(m22) == std::vector<std::string>{"z1", "z2"});
  auto gb22 = matrix_fglm(m22);
  CHECK(strings(gb22) == std::vector<std::string>{"z1 + z2 - 2", "z2^2 - 3*z2 + 2"});
  CHECK(gb22.standard_strings() == std::vector<std::string>{"1", "z2"});
  CHECK(vanishes_on_maps(gb22, m22.maps));
  auto gb24 = matrix_fglm(running_maps({2, 4}));
  CHECK(strings(gb24) == std::vector<std::string>{"z1 - 1", "z2 - 1"});
  auto drl = matrix_fglm(m22, ZOrder::DegRevLex);
  CHECK(vanishes_on_maps(drl, m22.maps));
  CHECK(drl.standard_monomials.size() == 2);
}

TEST_CASE("randomized vector variant") {
  auto m22 = running_maps({2, 2});
  const auto names = chart_names(m22);
  auto r = randomized_vector_fglm(m22.maps, ZOrder::Lex, names, 5);
  CHECK_FALSE(r.fell_back);
  CHECK(strings(r.basis) == strings(matrix_fglm(m22)));
  std::vector<Scalar> zero(m22.dim(), Scalar::zero(Q));
  auto z = randomized_vector_fglm(m22.maps, ZOrder::Lex, names, 5, zero);
  CHECK(z.fell_back);
  CHECK(strings(z.basis) == strings(matrix_fglm(m22)));
  // Jordan block with v in its kernel: the vector route sees only z1.
  auto n = DenseMatrix::from_rows({{0, 1}, {0, 0}}, Q);
  std::vector<Scalar> v{Scalar::one(Q), Scalar::zero(Q)};
  auto j = randomized_vector_fglm({n}, ZOrder::Lex, {"z1"}, 1, v);
  CHECK(j.fell_back);
  CHECK(strings(j.basis) == std::vector<std::string>{"z1^2"});
}

TEST_CASE("univariate FGLM gives the minimal polynomial") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    // repeated eigenvalues make the minimal polynomial a proper factor
    auto eigs = testsys::distinct_small_integers(3, seed);
    eigs.push_back(eigs[0]);
    auto a = testsys::matrix_with_eigenvalues(eigs, seed);
    auto gb = matrix_fglm({a}, ZOrder::Lex, {"z1"});
    REQUIRE(gb.elements.size() == 1);
    const auto mp = oracle::krylov_minpoly(oracle::to_qmat(a));
    const auto& el = gb.elements[0];
    std::vector<mpq_class> coeffs(mp.size());
    for (const auto& t : el.terms) {
      REQUIRE(t.mono[0] < coeffs.size());
      coeffs[t.mono[0]] = t.coef.rational();
    }
    CHECK(coeffs == mp);
    CHECK(mp.size() == 4);
  }
}

TEST_CASE("evaluation of chart polynomials") {
  auto gb = matrix_fglm(running_maps({2, 2}));
  for (const auto& p : gb.elements) {
    CHECK(std::abs(evaluate(p, {1.0, 1.0})) < 1e-14);
    CHECK(std::abs(evaluate(p, {0.0, 2.0})) < 1e-14);
    CHECK(evaluate_at_maps(p, running_maps({2, 2}).maps).is_zero());
  }
}

TEST_CASE("maps for another chart") {
  auto maps = running_maps({2, 2}, "x0 + x1");
  auto gb = matrix_fglm(maps);
  CHECK(vanishes_on_maps(gb, maps.maps));
  // points [1:1:1] and [1:0:2] give z = (1/2, 1/2) and (0, 2)
  for (const auto& p : gb.elements) {
    CHECK(std::abs(evaluate(p, {0.5, 0.5})) < 1e-14);
    CHECK(std::abs(evaluate(p, {0.0, 2.0})) < 1e-14);
  }
}
