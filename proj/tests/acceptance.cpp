// Acceptance checks. One PASS/FAIL line per criterion; details follow each
// line indented. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "biproj/admissible.hpp"
#include "biproj/commands.hpp"
#include "biproj/elimfglm.hpp"
#include "biproj/gb.hpp"
#include "biproj/macaulay.hpp"
#include "biproj/multmap.hpp"
#include "biproj/numeigen.hpp"
#include "biproj/verify.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace biproj;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F = FieldSpec::prime(65521);

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("info " + what); }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 10.0, "runtime " + std::to_string(secs) + " s < 10 s");
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS " : "FAIL ") << id << ": " << title << "\n";
  for (const auto& n : out.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
}

std::string matrix_string(const DenseMatrix& m) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) s << (j ? ", " : "") << m.at(i, j).to_string();
    s << "]";
  }
  s << "]";
  return s.str();
}

std::string degrees_string(const std::set<BiDegree>& d) {
  std::string s = "{";
  for (const auto& x : d) s += (s.size() > 1 ? "," : "") + x.to_string();
  return s + "}";
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

AdmissibleCertificate cert_with(const BiSystem& sys, BiDegree d, const std::string& h) {
  auto c = is_admissible(sys, d, testsys::poly(sys, h));
  if (!c) throw std::runtime_error(h + " is not admissible at " + d.to_string());
  return *c;
}

DenseMatrix random_rational_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  DenseMatrix a(n, n, Q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, Scalar::from_rational(Rational(num(rng), den(rng)), Q));
  return a;
}

// Permutes the computed basis into the reference order {x0^2y0^2, x0^2y0y1,
// x0^2y0y2, x0^2y1^2}: P^{-1} M P with P the permutation matrix.
DenseMatrix in_reference_order(const MultMapSet& maps, const DenseMatrix& m) {
  const std::vector<std::string> order{"x0^2*y0^2", "x0^2*y0*y1", "x0^2*y0*y2", "x0^2*y1^2"};
  DenseMatrix p(maps.dim(), order.size(), Q);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t i = 0; i < maps.dim(); ++i)
      if (maps.basis.basis()[i].to_string() == order[k]) p.set(i, k, Scalar::one(Q));
  return inverse(p) * m * p;
}

DenseMatrix permuted(const DenseMatrix& m, const std::vector<std::size_t>& perm) {
  DenseMatrix out(m.rows(), m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.at(perm[i], perm[j]));
  return out;
}

std::vector<std::string> eigen_strings(const std::vector<Eigenvalue>& e) {
  std::vector<std::string> out;
  for (const auto& v : e) {
    std::ostringstream s;
    if (v.exact) {
      s << v.exact->get_str();
    } else {
      s << v.value;
    }
    s << " (mult " << v.multiplicity << ")";
    out.push_back(s.str());
  }
  return out;
}

bool eigen_set_equals(const std::vector<Eigenvalue>& e, const std::vector<double>& expect, double tol) {
  if (e.size() != expect.size()) return false;
  for (double x : expect) {
    bool found = false;
    for (const auto& v : e) found = found || std::abs(v.value - Complex(x, 0)) <= tol;
    if (!found) return false;
  }
  return true;
}

int multiplicity_sum(const std::vector<Eigenvalue>& e) {
  int s = 0;
  for (const auto& v : e) s += v.multiplicity;
  return s;
}

BiSystem random_system(std::mt19937_64& rng, const FieldSpec& field) {
  std::uniform_int_distribution<int> dim(1, 2), gens(2, 4), deg(0, 2);
  BiSystem sys{{dim(rng), dim(rng)}, field, {}};
  const int k = gens(rng);
  for (int i = 0; i < k; ++i) {
    BiDegree d{deg(rng), deg(rng)};
    if (d == BiDegree{0, 0}) d = {1, 1};
    sys.generators.push_back(testsys::random_form(sys.dims, field, d, rng));
  }
  return sys;
}

// Systems with finite projection used by the property suites.
std::vector<BiSystem> property_systems() {
  std::vector<BiSystem> out{testsys::running_example(), testsys::running_example(F)};
  for (std::uint64_t s = 1; s <= 10; ++s) {
    out.push_back(testsys::eigen_system(testsys::matrix_with_eigenvalues(testsys::distinct_small_integers(3 + s % 3, s), s)));
  }
  for (std::uint64_t s = 1; s <= 20; ++s) out.push_back(testsys::random_11_pair(s % 2 ? Q : F, 1000 + s));
  return out;
}

}  // namespace

int main() {
  const auto sys = testsys::running_example();

  report(1, "running-example Hilbert values HF(2,2) = 4, HF(2,4) = 5 over Q and F_65521", [&](Outcome& o) {
    for (const auto& field : {Q, F}) {
      const auto s = sys.over(field);
      const auto h22 = hilbert_function(s, {2, 2});
      const auto h24 = hilbert_function(s, {2, 4});
      o.require(h22 == 4, "HF(2,2) over " + field.name() + " = " + std::to_string(h22));
      o.require(h24 == 5, "HF(2,4) over " + field.name() + " = " + std::to_string(h24));
    }
  });

  report(2, "admissibility certificates with random h", [&](Outcome& o) {
    for (BiDegree d : {BiDegree{2, 2}, BiDegree{2, 3}, BiDegree{3, 2}, BiDegree{2, 4}}) {
      auto c = is_admissible(sys, d);
      o.require(c.has_value(), d.to_string() + (c ? " certified with h = " + c->form.to_string() + " after " +
                                                       std::to_string(c->seeds_tried) + " seed(s)"
                                                 : " not certified"));
      if (c) {
        o.require(oracle::hilbert(sys, d.a, d.b) == oracle::hilbert(sys, d.a + 1, d.b) &&
                      oracle::hilbert(sys.with_generator(c->form), d.a, d.b) == 0,
                  d.to_string() + " re-checked by the independent Hilbert oracle");
      }
    }
    auto intro = testsys::eigen_system(random_rational_matrix(5, 31337));
    auto c = is_admissible(intro, {1, 1});
    o.require(c.has_value(), "intro system of a random 5x5 rational matrix certified at (1,1)");
  });

  report(3, "multiplication matrices at (2,2), h = x0, equal the printed reference matrices", [&](Outcome& o) {
    const auto maps = build_mult_maps(sys, cert_with(sys, {2, 2}, "x0"));
    const auto ref1 = DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}}, Q);
    const auto ref2 = DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, -1, 2}}, Q);
    const auto z1 = in_reference_order(maps, maps.maps[0]);
    const auto z2 = in_reference_order(maps, maps.maps[1]);
    o.note("computed M_z1 (reference basis order, column u = normal form of z1*u) = " + matrix_string(z1));
    o.note("computed M_z2 = " + matrix_string(z2));
    o.require(z1 == ref1, "M_z1 equals reference " + matrix_string(ref1));
    o.require(z2 == ref2, "M_z2 equals reference " + matrix_string(ref2));
    // Diagnostics: is there any basis permutation, in either convention, that
    // makes both matrices equal?
    std::vector<std::size_t> perm{0, 1, 2, 3};
    bool any = false;
    do {
      for (bool transpose : {false, true}) {
        auto a = permuted(z1, perm), b = permuted(z2, perm);
        if (transpose) {
          a = a.transpose();
          b = b.transpose();
        }
        any = any || (a == ref1 && b == ref2);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    o.note(std::string("some basis permutation (row or column convention) matches: ") + (any ? "yes" : "no"));
    o.note(std::string("same characteristic polynomials as the reference: ") +
           (charpoly(z1) == charpoly(ref1) && charpoly(z2) == charpoly(ref2) ? "yes" : "no"));
    o.note(std::string("M_z1 + M_z2 = 2I for both computed and reference: ") +
           (z1 + z2 == DenseMatrix::identity(4, Q).scaled(Scalar::from_int(2, Q)) &&
                    ref1 + ref2 == DenseMatrix::identity(4, Q).scaled(Scalar::from_int(2, Q))
                ? "yes"
                : "no"));
  });

  report(4, "lex FGLM bases at (2,2) and (2,4)", [&](Outcome& o) {
    auto gb22 = matrix_fglm(build_mult_maps(sys, cert_with(sys, {2, 2}, "x0")));
    const std::vector<std::string> ref22{"z1 + z2 - 2", "z2^2 - 3*z2 + 2"};
    o.require(gb22.element_strings() == ref22, "(2,2): " + join(gb22.element_strings()) + " vs " + join(ref22));
    auto m24 = build_mult_maps(sys, cert_with(sys, {2, 4}, "x0"));
    auto gb24 = matrix_fglm(m24);
    const std::vector<std::string> ref24{"z1 + z2 - 2", "z2 - 1"};
    o.require(gb24.element_strings() == ref24, "(2,4): " + join(gb24.element_strings()) + " vs " + join(ref24));
    // The reference generators of the (2,4) ideal vanish on the maps and the
    // two ideals share the point z = (1,1) with the same quotient dimension 1.
    ZPoly a{{{{1, 0}, Scalar::one(Q)}, {{0, 1}, Scalar::one(Q)}, {{0, 0}, Scalar::from_int(-2, Q)}}};
    ZPoly b{{{{0, 1}, Scalar::one(Q)}, {{0, 0}, Scalar::from_int(-1, Q)}}};
    const bool same_ideal = evaluate_at_maps(a, m24.maps).is_zero() && evaluate_at_maps(b, m24.maps).is_zero() &&
                            gb24.standard_monomials.size() == 1;
    o.note(std::string("(2,4) reference generators lie in the computed ideal and both ideals have colength 1 ") +
           "(same ideal, reference is not reduced): " + (same_ideal ? "yes" : "no"));
  });

  report(5, "eigenvalues of the map of x1/(x0+x1)", [&](Outcome& o) {
    for (auto [d, expect] : {std::pair{BiDegree{3, 2}, std::vector<double>{0.0, 1.0}},
                             std::pair{BiDegree{2, 4}, std::vector<double>{1.0}}}) {
      const auto cert = cert_with(sys, d, "x0 + x1");
      auto maps = build_mult_maps(sys, cert);
      auto e = eigenvalues(mult_map(sys, cert, testsys::poly(sys, "x1")));
      std::vector<std::string> want;
      for (double x : expect) want.push_back(std::to_string(x));
      o.require(eigen_set_equals(e, expect, 1e-8),
                d.to_string() + ": eigenvalues " + join(eigen_strings(e)) + " vs " + join(want));
      o.require(multiplicity_sum(e) == static_cast<int>(maps.dim()),
                d.to_string() + ": multiplicity sum " + std::to_string(multiplicity_sum(e)) + " = D = " +
                    std::to_string(maps.dim()));
      auto x0 = eigenvalues(mult_map(sys, cert_with(sys, d, "x0"), testsys::poly(sys, "x1")));
      o.note(d.to_string() + ": map of x1/x0 has eigenvalues " + join(eigen_strings(x0)));
    }
    o.note("x1/(x0+x1) takes the values 0 at [1:0:2] and 1/2 at [1:1:1]");
  });

  report(6, "solve and verify at (2,4) and (2,2)", [&](Outcome& o) {
    RunConfig cfg;
    cfg.command = "solve";
    cfg.system_path = testsys::fixture("running_example.json");
    cfg.degree = BiDegree{2, 4};
    auto r24 = run_command(cfg);
    o.require(r24.exit_code == 0, "solve --degree 2 4 exits 0");
    const auto& p24 = r24.json["points"];
    o.require(p24.size() == 1, "(2,4) returns one point: " + p24.dump());
    if (p24.size() == 1) {
      o.require(p24[0]["exact"] == nlohmann::json::array({"1", "1", "1"}), "(2,4) point is exactly [1:1:1]");
      bool close = true;
      for (const auto& c : p24[0]["coords"]) close = close && std::abs(c.get<double>() - 1.0) <= 1e-8;
      o.require(close, "(2,4) floating coordinates within 1e-8 of [1:1:1]");
      o.require(p24[0]["membership"]["verdict"] == "InProjection" && p24[0]["membership"]["b_used"] == 6,
                "[1:1:1] verified InProjection at b = 6");
    }
    cfg.degree = BiDegree{2, 2};
    auto r22 = run_command(cfg);
    o.require(r22.exit_code == 0, "solve --degree 2 2 exits 0");
    bool has111 = false, has102 = false;
    for (const auto& p : r22.json["points"]) {
      if (p["exact"] == nlohmann::json::array({"1", "1", "1"})) {
        has111 = p["membership"]["verdict"] == "InProjection";
      }
      if (p["exact"] == nlohmann::json::array({"1", "0", "2"})) {
        has102 = p["membership"]["verdict"] == "NotInProjection" && p["extraneous"] == true;
        bool close = std::abs(p["coords"][0].get<double>() - 1) <= 1e-8 &&
                     std::abs(p["coords"][1].get<double>()) <= 1e-8 &&
                     std::abs(p["coords"][2].get<double>() - 2) <= 1e-8;
        o.require(close, "[1:0:2] floating coordinates within 1e-8");
      }
    }
    o.require(has111, "(2,2) returns [1:1:1], verified InProjection");
    o.require(has102, "(2,2) returns [1:0:2], labelled NotInProjection (extraneous)");
  });

  report(7, "intro eigenvalue oracle on 10 random 5x5 matrices", [&](Outcome& o) {
    int agree_char = 0, agree_min = 0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
      auto eigs = testsys::distinct_small_integers(5, 500 + s);
      auto a = testsys::matrix_with_eigenvalues(eigs, 700 + s);
      auto intro = testsys::eigen_system(a);
      auto maps = build_mult_maps(intro, cert_with(intro, {1, 1}, "x0"));
      if (maps.maps.size() == 1 && charpoly(maps.maps[0]) == charpoly(a)) ++agree_char;
      auto gb = matrix_fglm(maps);
      const auto mp = oracle::krylov_minpoly(oracle::to_qmat(a));
      std::vector<mpq_class> got(mp.size());
      bool ok = gb.elements.size() == 1;
      if (ok) {
        for (const auto& t : gb.elements[0].terms) {
          if (t.mono[0] >= got.size()) {
            ok = false;
            break;
          }
          got[t.mono[0]] = t.coef.rational();
        }
      }
      if (ok && got == mp) ++agree_min;
    }
    o.require(agree_char == 10, std::to_string(agree_char) + "/10 characteristic polynomials equal that of A");
    o.require(agree_min == 10, std::to_string(agree_min) + "/10 FGLM outputs equal the Krylov minimal polynomial");
  });

  report(8, "property suites", [&](Outcome& o) {
    const auto systems = property_systems();
    int certs = 0, stab_bad = 0, map_sets = 0, comm_bad = 0;
    for (const auto& s : systems) {
      auto c = find_admissible(s);
      ++certs;
      const auto d = c.degree;
      if (!is_admissible(s, {d.a + 1, d.b}, c.form) || !is_admissible(s, {d.a + 2, d.b}, c.form)) ++stab_bad;
      for (int extra = 0; extra <= 1; ++extra) {
        auto cc = extra == 0 ? c : *is_admissible(s, {d.a + 1, d.b}, c.form);
        auto maps = build_mult_maps(s, cc);
        ++map_sets;
        for (std::size_t i = 0; i < maps.maps.size(); ++i)
          for (std::size_t j = i + 1; j < maps.maps.size(); ++j)
            if (!(maps.maps[i] * maps.maps[j] == maps.maps[j] * maps.maps[i])) ++comm_bad;
      }
    }
    o.require(certs >= 30 && stab_bad == 0, "(a) stabilization: " + std::to_string(certs) + " certificates, " +
                                                std::to_string(stab_bad) + " violations");
    o.require(comm_bad == 0, "(b) commutation: " + std::to_string(map_sets) + " map sets, " +
                                 std::to_string(comm_bad) + " non-commuting pairs");

    std::mt19937_64 rng(4242);
    int probes = 0, two_bad = 0;
    while (probes < 60) {
      auto s = random_system(rng, probes % 2 ? Q : F);
      std::uniform_int_distribution<int> dk(1, 2), dd(0, 2);
      const int k = dk(rng);
      const BiDegree deg{dd(rng), dd(rng)};
      auto g = testsys::random_form(s.dims, s.field, {k, 0}, rng);
      auto src = quotient_basis(s, deg);
      auto tgt = quotient_basis(s, deg + BiDegree{k, 0});
      const auto image = rank(bar_map(s, g, src, tgt).matrix);
      const bool injective = image == src.size();
      const bool hf_identity = oracle::hilbert(s.with_generator(g), deg.a + k, deg.b) == tgt.size() - image;
      if (injective != colon_piece_equal(s, g, deg) || !hf_identity) ++two_bad;
      ++probes;
    }
    o.require(two_bad == 0, "(c) two-of-three: " + std::to_string(probes) + " probes, " + std::to_string(two_bad) +
                                " violations");

    int pairs = 0, skipped = 0, bound_bad = 0;
    for (std::uint64_t seed = 1; pairs < 20; ++seed) {
      auto s = testsys::random_11_pair(F, 9000 + seed);
      // zero-dimensional: the Hilbert function is the constant 2 far out
      if (hilbert_function(s, {3, 3}) != 2 || hilbert_function(s, {4, 4}) != 2) {
        ++skipped;
        continue;
      }
      ++pairs;
      const auto mac = macaulay_bound(s), kos = koszul_bound(s);
      if (!(mac == BiDegree{1, 1}) || !(kos == BiDegree{1, 1}) || !is_admissible(s, mac) || !is_admissible(s, kos)) {
        ++bound_bad;
      }
    }
    o.require(bound_bad == 0, "(d) bounds: " + std::to_string(pairs) + " zero-dimensional (1,1) pairs over F_65521 (" +
                                  std::to_string(skipped) + " non-zero-dimensional draws skipped), " +
                                  std::to_string(bound_bad) + " bounds not admissible");
  });

  report(9, "bigin generator bidegrees and the admissibility consistency report", [&](Outcome& o) {
    const auto fp = sys.over(F);
    auto r = bigin(fp, kDefaultSeed);
    const auto degs = bigin_degrees(r);
    const std::set<BiDegree> got(degs.begin(), degs.end());
    const std::set<BiDegree> ref{{0, 1}, {0, 2}, {1, 1}, {2, 0}, {2, 1}, {3, 1}};
    o.require(r.stable, "all " + std::to_string(kBiginSeeds) + " seeds agree");
    o.require(got == ref, "bidegrees (x-degree, y-degree) " + degrees_string(got) + " vs reference " +
                              degrees_string(ref));
    std::set<BiDegree> swapped;
    for (const auto& d : got) swapped.insert({d.b, d.a});
    o.note("with coordinates swapped the computed set is " + degrees_string(swapped) +
           (swapped == ref ? " (equal to the reference)" : " (differs)"));
    o.note("the linear generator 2*x0 - x1 - x2 forces a (1,0) generator in the (x, y) convention");
    std::vector<AdmissibleProbe> probes;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 5; ++b) probes.push_back({{a, b}, is_admissible(fp, {a, b}).has_value()});
    auto rep = consistency_report(probes, degs);
    o.require(rep.consistent && rep.violations.empty(),
              "consistency report over a in 0..4, b in 0..5: " + std::to_string(rep.checked.size()) +
                  " probes checked, " + std::to_string(rep.violations.size()) + " violations (" + rep.status + ")");
  });

  {
    const auto k = koszul_bound(sys);
    std::cout << "INFO 10: not reproducible at desk scale: the asymptotic complexity bound; "
              << "generalized Koszul bound for the running example evaluates to " << k.to_string()
              << " (quoted value (83,6))" << (k == BiDegree{83, 6} ? "" : ", discrepancy recorded") << "\n";
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
