#include "biproj/numeigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "biproj/error.hpp"

namespace biproj {
namespace {

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly monic(QPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a / b, b != 0.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly exact_div(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

std::optional<Rational> rationalize(double x, const QPoly& p) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued fraction convergents with denominators up to 10^6
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int step = 0; step < 40; ++step) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const mpz_class ai(a);
    const mpz_class h2 = ai * h1 + h0;
    const mpz_class k2 = ai * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational q(h1, k1);
    q.canonicalize();
    if (sgn(poly_eval(p, q)) == 0) return q;
    const double frac = r - a;
    if (frac < 1e-300) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

Complex horner(const std::vector<Complex>& a, Complex z) {
  Complex v = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * z + a[i];
  return v;
}

DenseMatrix power(const DenseMatrix& m, int k) {
  DenseMatrix out = DenseMatrix::identity(m.rows(), m.field());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

ComplexMatrix to_complex(const DenseMatrix& m) {
  ComplexMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m.at(i, j).to_double();
  }
  return c;
}

ComplexMatrix shifted_power(const ComplexMatrix& m, Complex lambda, int k) {
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < a.rows; ++i) a(i, i) -= lambda;
  ComplexMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i) out(i, i) = 1.0;
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data) s += std::norm(z);
  return std::sqrt(s);
}

struct Root {
  Complex value;
  std::optional<Rational> exact;
  int multiplicity;
};

std::vector<Root> roots_with_multiplicity(const QPoly& cp) {
  std::vector<Root> out;
  for (const auto& [f, k] : squarefree_factorization(cp)) {
    if (degree(f) == 1) {
      const Rational r = -f[0] / f[1];
      out.push_back({Complex(nearest_double(r), 0.0), r, k});
      continue;
    }
    for (const Complex& z : poly_roots(f)) {
      std::optional<Rational> exact;
      if (std::abs(z.imag()) <= 1e-8 * std::max(1.0, std::abs(z))) exact = rationalize(z.real(), f);
      out.push_back({exact ? Complex(nearest_double(*exact), 0.0) : z, exact, k});
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace

QPoly charpoly(const DenseMatrix& m) {
  if (!m.square()) throw Error(Errc::InvalidInput, "characteristic polynomial of a non-square matrix");
  if (m.field().is_prime()) throw Error(Errc::PrimeFieldEigen, "eigenvalues are not computed over F_p");
  if (!m.field().is_rational()) throw Error(Errc::InexactField, "exact rational matrix required");
  const DenseMatrix& a = m;
  const std::size_t n = a.rows();
  QPoly c(n + 1, Rational(0));
  c[n] = 1;
  DenseMatrix am(n, n, a.field());  // A * M_{k-1}, with M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    DenseMatrix mk = am;
    for (std::size_t i = 0; i < n; ++i) mk.set(i, i, mk.at(i, i) + Scalar::from_rational(c[n - k + 1], a.field()));
    am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am.rational_row(i)[i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Rational poly_eval(const QPoly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<std::pair<QPoly, int>> squarefree_factorization(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = monic(p);
  if (degree(f) <= 0) return out;
  // Yun's algorithm
  const QPoly fp = derivative(f);
  const QPoly a0 = poly_gcd(f, fp);
  QPoly b = exact_div(f, a0);
  QPoly c = exact_div(fp, a0);
  QPoly d = sub(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    const QPoly a = poly_gcd(b, d);
    if (degree(a) > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

std::vector<Complex> poly_roots(const QPoly& p) {
  QPoly f = monic(p);
  const int d = degree(f);
  if (d <= 0) return {};
  std::vector<Complex> a;
  for (const auto& c : f) a.emplace_back(nearest_double(c), 0.0);
  std::vector<Complex> da;
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<double>(i));
  double radius = 0.0;
  for (int i = 1; i <= d; ++i) radius = std::max(radius, std::pow(std::abs(a[static_cast<std::size_t>(d - i)]), 1.0 / i));
  radius = std::max(radius, 1e-3);
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / d + 0.4);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const Complex pk = horner(a, z[k]);
      if (pk == Complex(0.0)) continue;
      const Complex w = pk / horner(da, z[k]);
      Complex s = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) s += 1.0 / (z[k] - z[j]);
      }
      const Complex step = w / (1.0 - w * s);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-16) break;
  }
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      const Complex dv = horner(da, r);
      if (dv == Complex(0.0)) break;
      r -= horner(a, r) / dv;
    }
  }
  return z;
}

std::string poly_string(const QPoly& p, const std::string& var) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) == 0) continue;
    const bool neg = sgn(p[i]) < 0;
    const Rational mag = abs(p[i]);
    std::string body;
    const std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Eigenvalue> eigenvalues(const DenseMatrix& m) {
  std::vector<Eigenvalue> out;
  for (const auto& r : roots_with_multiplicity(charpoly(m))) out.push_back({r.value, r.multiplicity, r.exact});
  return out;
}

namespace {

struct Attempt {
  bool ambiguous = false;
  std::vector<RecoveredPoint> points;
};

std::vector<Complex> normalize(std::vector<Complex> x) {
  double scale = 0.0;
  for (const auto& v : x) scale = std::max(scale, std::abs(v));
  for (const auto& v : x) {
    if (std::abs(v) > 1e-12 * scale) {
      const Complex lead = v;
      for (auto& w : x) w /= lead;
      break;
    }
  }
  return x;
}

Attempt attempt_recovery(const MultMapSet& maps, const std::vector<Rational>& c, double tol,
                         const GroebnerBasis* gb) {
  const std::size_t dim = maps.dim();
  const FieldSpec q = FieldSpec::rationals();
  DenseMatrix mc(dim, dim, q);
  for (std::size_t i = 0; i < maps.maps.size(); ++i) mc += maps.maps[i].scaled(Scalar::from_rational(c[i], q));
  const std::vector<Root> roots = roots_with_multiplicity(charpoly(mc));
  Attempt out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double scale = std::max(1.0, std::abs(roots[i].value));
      if (std::abs(roots[i].value - roots[j].value) < 10.0 * tol * scale) out.ambiguous = true;
    }
  }
  if (out.ambiguous) return out;

  std::vector<Complex> hcoef;
  for (int j = 0; j <= static_cast<int>(maps.chart_indices.size()); ++j) {
    hcoef.emplace_back(maps.h.coefficient(Monomial::variable(maps.h.dims(), j)).to_double(), 0.0);
  }
  const ComplexMatrix mc_float = to_complex(mc);
  for (const auto& root : roots) {
    const int k = root.multiplicity;
    RecoveredPoint pt;
    pt.multiplicity = k;
    std::vector<std::optional<Rational>> exact_chart;
    if (root.exact) {
      DenseMatrix shifted = mc;
      for (std::size_t i = 0; i < dim; ++i) shifted.set(i, i, shifted.at(i, i) - Scalar::from_rational(*root.exact, q));
      const DenseMatrix n = kernel_basis(power(shifted, k));
      const DenseMatrix nt = n.transpose();
      const DenseMatrix gram = nt * n;
      for (const auto& mi : maps.maps) {
        const DenseMatrix ci = solve(gram, nt * mi * n);
        Rational tr = 0;
        for (std::size_t r = 0; r < ci.rows(); ++r) tr += ci.at(r, r).rational();
        const Rational z = tr / static_cast<long>(k);
        DenseMatrix nil = ci;
        for (std::size_t r = 0; r < ci.rows(); ++r) nil.set(r, r, nil.at(r, r) - Scalar::from_rational(z, q));
        if (!power(nil, k).is_zero()) {
          out.ambiguous = true;
          return out;
        }
        exact_chart.emplace_back(z);
        pt.chart.emplace_back(nearest_double(z), 0.0);
      }
    } else {
      const ComplexMatrix n = near_kernel(shifted_power(mc_float, root.value, k), static_cast<std::size_t>(k));
      const ComplexMatrix nh = conjugate_transpose(n);
      for (const auto& mi : maps.maps) {
        ComplexMatrix ci = nh * to_complex(mi) * n;
        Complex tr = 0.0;
        for (std::size_t r = 0; r < ci.rows; ++r) tr += ci(r, r);
        const Complex z = tr / static_cast<double>(k);
        const double spread = frobenius(shifted_power(ci, z, k));
        if (spread > std::sqrt(tol) * std::pow(std::max(1.0, std::abs(z)), k)) {
          out.ambiguous = true;
          return out;
        }
        exact_chart.emplace_back(std::nullopt);
        pt.chart.push_back(z);
      }
    }
    // lift to P^n with h(xi) = 1
    const std::size_t nx = maps.chart_indices.size() + 1;
    std::vector<Complex> x(nx, 0.0);
    Complex rest = 1.0;
    for (std::size_t i = 0; i < maps.chart_indices.size(); ++i) {
      const auto j = static_cast<std::size_t>(maps.chart_indices[i]);
      x[j] = pt.chart[i];
      rest -= hcoef[j] * pt.chart[i];
    }
    const auto hj = static_cast<std::size_t>(maps.h_index);
    x[hj] = rest / hcoef[hj];
    pt.coords = normalize(x);
    if (std::all_of(exact_chart.begin(), exact_chart.end(), [](const auto& v) { return v.has_value(); })) {
      std::vector<Rational> ex(nx, Rational(0));
      Rational r = 1;
      for (std::size_t i = 0; i < maps.chart_indices.size(); ++i) {
        const auto j = static_cast<std::size_t>(maps.chart_indices[i]);
        const Rational hjc = maps.h.coefficient(Monomial::variable(maps.h.dims(), static_cast<int>(j))).rational();
        ex[j] = *exact_chart[i];
        r -= hjc * ex[j];
      }
      ex[hj] = r / maps.h.coefficient(Monomial::variable(maps.h.dims(), maps.h_index)).rational();
      for (const auto& v : ex) {
        if (sgn(v) != 0) {
          const Rational lead = v;
          for (auto& w : ex) w /= lead;
          break;
        }
      }
      for (std::size_t i = 0; i < nx; ++i) pt.coords[i] = Complex(nearest_double(ex[i]), 0.0);
      pt.exact = ex;
    }
    double scale = 1.0;
    for (const auto& v : pt.coords) scale = std::max(scale, std::abs(v));
    pt.real = std::all_of(pt.coords.begin(), pt.coords.end(),
                          [&](const Complex& v) { return std::abs(v.imag()) <= tol * scale; });
    if (gb != nullptr) {
      for (const auto& g : gb->elements) pt.residual = std::max(pt.residual, std::abs(evaluate(g, pt.chart)));
    } else {
      for (std::size_t i = 0; i < maps.maps.size(); ++i) {
        ComplexMatrix a = to_complex(maps.maps[i]);
        for (std::size_t r = 0; r < dim; ++r) a(r, r) -= pt.chart[i];
        pt.residual = std::max(pt.residual, sigma_min(a));
      }
    }
    out.points.push_back(std::move(pt));
  }
  for (auto& p : out.points) {
    if (p.real) continue;
    for (const auto& o : out.points) {
      if (&o == &p || o.real) continue;
      double diff = 0.0;
      for (std::size_t i = 0; i < p.coords.size(); ++i) diff = std::max(diff, std::abs(p.coords[i] - std::conj(o.coords[i])));
      if (diff <= std::sqrt(tol)) p.conjugate_pair = true;
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const RecoveredPoint& a, const RecoveredPoint& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if (a.coords[i].real() != b.coords[i].real()) return a.coords[i].real() < b.coords[i].real();
      if (a.coords[i].imag() != b.coords[i].imag()) return a.coords[i].imag() < b.coords[i].imag();
    }
    return false;
  });
  return out;
}

}  // namespace

PointSet recover_points(const MultMapSet& maps, std::uint64_t seed, double tol, const GroebnerBasis* gb) {
  if (maps.field().is_prime()) throw Error(Errc::PrimeFieldEigen, "point recovery needs maps over Q");
  PointSet set;
  set.degree_used = maps.degree;
  set.total_dim = maps.dim();
  if (maps.dim() == 0) return set;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::mt19937_64 rng(seed + 15485863ull * static_cast<std::uint64_t>(attempt));
    std::uniform_int_distribution<long> dist(1, 1000);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < maps.maps.size(); ++i) c.emplace_back(dist(rng));
    Attempt a = attempt_recovery(maps, c, tol, gb);
    set.attempts = attempt + 1;
    if (a.ambiguous) continue;
    set.points = std::move(a.points);
    for (const auto& v : c) set.combination.push_back(nearest_double(v));
    int total = 0;
    for (const auto& p : set.points) total += p.multiplicity;
    if (static_cast<std::size_t>(total) != set.total_dim) {
      throw Error(Errc::ClusterAmbiguity, "multiplicities do not sum to the quotient dimension");
    }
    return set;
  }
  throw Error(Errc::ClusterAmbiguity, "eigenvalue clusters collide for three random combinations");
}

CharpolyCheck charpoly_check(const DenseMatrix& m, const std::vector<std::pair<Complex, int>>& values,
                             double tol) {
  const QPoly cp = charpoly(m);
  std::vector<Complex> prod{1.0};
  for (const auto& [v, mu] : values) {
    for (int e = 0; e < mu; ++e) {
      std::vector<Complex> next(prod.size() + 1, 0.0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] += prod[i];
        next[i] -= v * prod[i];
      }
      prod = std::move(next);
    }
  }
  CharpolyCheck out;
  if (prod.size() != cp.size()) {
    out.max_deviation = std::numeric_limits<double>::infinity();
    return out;
  }
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const double ref = nearest_double(cp[i]);
    out.max_deviation = std::max(out.max_deviation, std::abs(prod[i] - ref) / std::max(1.0, std::abs(ref)));
  }
  out.ok = out.max_deviation <= tol;
  return out;
}

CharpolyCheck charpoly_check(const MultMapSet& maps, const std::vector<Rational>& combination,
                             const PointSet& points, double tol) {
  const FieldSpec q = FieldSpec::rationals();
  DenseMatrix mc(maps.dim(), maps.dim(), q);
  for (std::size_t i = 0; i < maps.maps.size(); ++i) {
    mc += maps.maps[i].scaled(Scalar::from_rational(combination[i], q));
  }
  std::vector<std::pair<Complex, int>> values;
  for (const auto& p : points.points) {
    Complex v = 0.0;
    for (std::size_t i = 0; i < combination.size(); ++i) v += nearest_double(combination[i]) * p.chart[i];
    values.emplace_back(v, p.multiplicity);
  }
  return charpoly_check(mc, values, tol);
}

}  // namespace biproj
