#include "biproj/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "biproj/admissible.hpp"
#include "biproj/error.hpp"
#include "biproj/macaulay.hpp"

namespace biproj {

std::string verdict_name(Verdict v) {
  return v == Verdict::InProjection ? "InProjection" : "NotInProjection";
}

int membership_degree(const BiSystem& sys) {
  int sum = 0;
  for (const auto& d : sys.degrees()) sum += d.b;
  return std::max(sum - sys.dims.m, 0);
}

MembershipReport verify_exact(const BiSystem& sys, std::span<const Scalar> xi, std::optional<int> b) {
  if (!sys.field.is_exact()) throw Error(Errc::InexactField, "exact verification needs an exact field");
  if (static_cast<int>(xi.size()) != sys.dims.nx()) {
    throw Error(Errc::InvalidInput, "point has " + std::to_string(xi.size()) + " coordinates, expected " +
                                        std::to_string(sys.dims.nx()));
  }
  const std::vector<Scalar> point = normalize_point(xi);
  MembershipReport report;
  report.b_used = std::max(b.value_or(membership_degree(sys)), 0);
  BiSystem special{sys.dims, point.front().field(), {}};
  for (const auto& f : sys.generators) {
    BiPoly g = specialize_x(f, point);
    if (!g.is_zero()) special.generators.push_back(std::move(g));
  }
  const MacaulayMatrix mac = build_macaulay(special, {0, report.b_used});
  report.rank = mac.rank();
  report.full_rank = mac.columns().size();
  report.verdict = report.rank < report.full_rank ? Verdict::InProjection : Verdict::NotInProjection;
  report.margin = static_cast<double>(report.full_rank - report.rank);
  for (const auto& c : point) report.point.push_back(c.to_string());
  return report;
}

MembershipReport verify_numeric(const BiSystem& sys, std::span<const Complex> xi, double tol,
                                std::optional<int> b) {
  if (static_cast<int>(xi.size()) != sys.dims.nx()) {
    throw Error(Errc::InvalidInput, "point has " + std::to_string(xi.size()) + " coordinates, expected " +
                                        std::to_string(sys.dims.nx()));
  }
  // scale by the largest coordinate; the test is projectively invariant
  std::size_t big = 0;
  for (std::size_t i = 1; i < xi.size(); ++i) {
    if (std::abs(xi[i]) > std::abs(xi[big])) big = i;
  }
  if (std::abs(xi[big]) == 0.0) throw Error(Errc::ZeroPoint, "all coordinates vanish");
  std::vector<Complex> point(xi.begin(), xi.end());
  for (auto& c : point) c /= xi[big];
  const bool real = std::all_of(point.begin(), point.end(), [](const Complex& c) { return c.imag() == 0.0; });

  MembershipReport report;
  report.numeric = true;
  report.tol = tol;
  report.b_used = std::max(b.value_or(membership_degree(sys)), 0);
  const std::vector<Monomial> cols = monomials_of({0, report.b_used}, sys.dims);
  std::map<std::vector<int>, std::size_t> index;
  auto key = [&](const Monomial& u) {
    std::vector<int> k;
    for (int j = 0; j < sys.dims.ny(); ++j) k.push_back(u.y(j));
    return k;
  };
  for (std::size_t c = 0; c < cols.size(); ++c) index[key(cols[c])] = c;

  std::vector<std::vector<Complex>> rows;
  for (const auto& f : sys.generators) {
    const BiDegree d = f.bidegree();
    if (d.b > report.b_used) continue;
    // specialized coefficients per y-monomial
    std::vector<std::pair<Monomial, Complex>> spec;
    for (const auto& t : f.terms()) {
      Complex c = t.coef.to_double();
      for (int i = 0; i < sys.dims.nx(); ++i) {
        for (int e = 0; e < t.mono.x(i); ++e) c *= point[static_cast<std::size_t>(i)];
      }
      spec.emplace_back(t.mono.y_part(), c);
    }
    for (const auto& u : monomials_of({0, report.b_used - d.b}, sys.dims)) {
      std::vector<Complex> row(cols.size(), 0.0);
      for (const auto& [mono, c] : spec) row[index.at(key(mono * u))] += c;
      rows.push_back(std::move(row));
    }
  }
  report.full_rank = cols.size();
  ComplexMatrix a(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = rows[i][j];
  }
  std::vector<double> sigma;
  if (real) {
    RealMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
      for (std::size_t j = 0; j < a.cols; ++j) r(i, j) = a(i, j).real();
    }
    sigma = jacobi_svd(r).sigma;
  } else {
    // every singular value appears twice in the real embedding
    const std::vector<double> all = jacobi_svd(real_embedding(a)).sigma;
    for (std::size_t i = 0; i < all.size(); i += 2) sigma.push_back(all[i]);
  }
  if (a.rows == 0 || sigma.empty() || sigma.front() == 0.0) {
    report.rank = 0;
    report.margin = 0.0;
  } else {
    for (double s : sigma) report.rank += (s / sigma.front() >= tol) ? 1 : 0;
    report.margin = sigma.back() / sigma.front();
  }
  report.verdict = report.rank < report.full_rank ? Verdict::InProjection : Verdict::NotInProjection;
  for (const auto& c : point) {
    std::ostringstream os;
    os.precision(17);
    if (c.imag() == 0.0) {
      os << c.real();
    } else {
      os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    }
    report.point.push_back(os.str());
  }
  return report;
}

}  // namespace biproj
