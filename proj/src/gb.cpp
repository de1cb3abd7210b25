#include "biproj/gb.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "biproj/error.hpp"

namespace biproj {
namespace {

// Terms sorted decreasingly in the basis order.
using Poly = std::vector<Term>;

Poly sorted_terms(const BiPoly& f, const MonomialOrder& order) {
  Poly p = f.terms();
  std::sort(p.begin(), p.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return p;
}

// f - c * u * g, both inputs sorted.
Poly sub_scaled(const Poly& f, const Scalar& c, const Monomial& u, const Poly& g,
                const MonomialOrder& order) {
  Poly out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    const Monomial gm = g[j].mono * u;
    if (i == f.size()) {
      out.push_back({gm, -(c * g[j].coef)});
      ++j;
      continue;
    }
    const int cmp = order.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g[j].coef)});
      ++j;
    } else {
      Scalar v = f[i].coef - c * g[j].coef;
      if (!v.is_zero()) out.push_back({f[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Poly& p) {
  if (p.empty() || p.front().coef.is_one()) return;
  const Scalar inv = p.front().coef.inverse();
  for (auto& t : p) t.coef *= inv;
}

class Engine {
 public:
  Engine(const MonomialOrder& order) : order_(order) {}

  // Full reduction against the active basis.
  Poly reduce(Poly p) const {
    Poly rem;
    std::size_t head = 0;
    while (head < p.size()) {
      const Term& lt = p[head];
      const Poly* div = nullptr;
      for (std::size_t k : active_) {
        if (polys_[k].front().mono.divides(lt.mono)) {
          div = &polys_[k];
          break;
        }
      }
      if (div == nullptr) {
        rem.push_back(lt);
        ++head;
        continue;
      }
      const Scalar c = lt.coef / div->front().coef;
      const Monomial u = div->front().mono.quotient_of(lt.mono);
      Poly tail(p.begin() + static_cast<std::ptrdiff_t>(head), p.end());
      p = sub_scaled(tail, c, u, *div, order_);
      head = 0;
    }
    return rem;
  }

  Poly spoly(std::size_t a, std::size_t b) const {
    const Poly& f = polys_[a];
    const Poly& g = polys_[b];
    const Monomial l = f.front().mono.lcm(g.front().mono);
    const Monomial uf = f.front().mono.quotient_of(l);
    const Monomial ug = g.front().mono.quotient_of(l);
    Poly lhs;
    for (const auto& t : f) lhs.push_back({t.mono * uf, t.coef / f.front().coef});
    return sub_scaled(lhs, g.front().coef.inverse(), ug, g, order_);
  }

  void add(Poly h) {
    make_monic(h);
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    update(hi);
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (pair_less(*it, *best)) best = it;
      }
      const auto [a, b] = *best;
      pairs_.erase(best);
      Poly r = reduce(spoly(a, b));
      if (!r.empty()) add(std::move(r));
    }
  }

  std::vector<Poly> reduced_basis() const {
    std::vector<Poly> min;
    for (std::size_t k : active_) min.push_back(polys_[k]);
    std::sort(min.begin(), min.end(), [&](const Poly& a, const Poly& b) {
      return order_.compare(a.front().mono, b.front().mono) < 0;
    });
    std::vector<Poly> kept;
    for (const auto& p : min) {
      const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Poly& q) {
        return q.front().mono.divides(p.front().mono);
      });
      if (!redundant) kept.push_back(p);
    }
    Engine inter(order_);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      inter.polys_.push_back(kept[i]);
    }
    std::vector<Poly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      inter.active_.clear();
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (k != i) inter.active_.push_back(k);
      }
      Poly tail(kept[i].begin() + 1, kept[i].end());
      Poly p{kept[i].front()};
      for (auto& t : inter.reduce(tail)) p.push_back(std::move(t));
      make_monic(p);
      out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
      return order_.compare(a.front().mono, b.front().mono) < 0;
    });
    return out;
  }

 private:
  using Pair = std::pair<std::size_t, std::size_t>;

  Monomial lcm_of(const Pair& p) const {
    return polys_[p.first].front().mono.lcm(polys_[p.second].front().mono);
  }

  bool pair_less(const Pair& x, const Pair& y) const {
    const Monomial lx = lcm_of(x);
    const Monomial ly = lcm_of(y);
    if (lx.total_degree() != ly.total_degree()) return lx.total_degree() < ly.total_degree();
    const int c = order_.compare(lx, ly);
    if (c != 0) return c < 0;
    return x < y;
  }

  // Gebauer-Moeller update for a new element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].front().mono;
    std::vector<std::size_t> cand = active_;
    std::vector<Pair> d;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const std::size_t g1 = cand[i];
      const Monomial l1 = lh.lcm(polys_[g1].front().mono);
      bool keep = lh.coprime(polys_[g1].front().mono);
      if (!keep) {
        keep = true;
        for (std::size_t j = i + 1; j < cand.size() && keep; ++j) {
          if (lh.lcm(polys_[cand[j]].front().mono).divides(l1)) keep = false;
        }
        for (const auto& [hh, g2] : d) {
          if (!keep) break;
          if (lh.lcm(polys_[g2].front().mono).divides(l1)) keep = false;
        }
      }
      if (keep) d.push_back({h, g1});
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const Monomial l = lcm_of(p);
      const bool drop = lh.divides(l) && !(polys_[p.first].front().mono.lcm(lh) == l) &&
                        !(lh.lcm(polys_[p.second].front().mono) == l);
      if (!drop) next.push_back(p);
    }
    for (const auto& [hh, g] : d) {
      if (!lh.coprime(polys_[g].front().mono)) next.push_back({g, hh});
    }
    pairs_ = std::move(next);
    std::vector<std::size_t> basis;
    for (std::size_t g : active_) {
      if (!lh.divides(polys_[g].front().mono)) basis.push_back(g);
    }
    basis.push_back(h);
    active_ = std::move(basis);
  }

  MonomialOrder order_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

BiPoly to_bipoly(const RingDims& dims, const FieldSpec& field, const Poly& p) {
  return BiPoly::from_terms(dims, field, p);
}

}  // namespace

GroebnerBasisBigraded buchberger(const BiSystem& sys, const MonomialOrder& order) {
  if (!sys.field.is_exact()) throw Error(Errc::InexactField, "Buchberger needs an exact field");
  Engine engine(order);
  for (const auto& g : sys.generators) {
    Poly p = engine.reduce(sorted_terms(g, order));
    if (!p.empty()) engine.add(std::move(p));
  }
  engine.run();
  GroebnerBasisBigraded gb{order, sys.dims, sys.field, {}, {}};
  for (const auto& p : engine.reduced_basis()) {
    gb.leading.push_back(p.front().mono);
    gb.elements.push_back(to_bipoly(sys.dims, sys.field, p));
  }
  return gb;
}

namespace {


}  // namespace

BiPoly reduce(const GroebnerBasisBigraded& gb, const BiPoly& f) {
  // Plain reduction: elements are already reduced and monic.
  Poly p = sorted_terms(f, gb.order);
  std::vector<Poly> basis;
  for (const auto& g : gb.elements) basis.push_back(sorted_terms(g, gb.order));
  Poly rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term& lt = p[head];
    const Poly* div = nullptr;
    for (const auto& g : basis) {
      if (g.front().mono.divides(lt.mono)) {
        div = &g;
        break;
      }
    }
    if (div == nullptr) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const Scalar c = lt.coef / div->front().coef;
    const Monomial u = div->front().mono.quotient_of(lt.mono);
    Poly tail(p.begin() + static_cast<std::ptrdiff_t>(head), p.end());
    p = sub_scaled(tail, c, u, *div, gb.order);
    head = 0;
  }
  return to_bipoly(gb.dims, gb.field, rem);
}

bool satisfies_buchberger_criterion(const GroebnerBasisBigraded& gb) {
  const std::size_t n = gb.elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const BiPoly& f = gb.elements[i];
      const BiPoly& g = gb.elements[j];
      const Monomial l = gb.leading[i].lcm(gb.leading[j]);
      const Scalar cf = f.coefficient(gb.leading[i]);
      const Scalar cg = g.coefficient(gb.leading[j]);
      const BiPoly s = f.times_monomial(gb.leading[i].quotient_of(l)).scaled(cf.inverse()) -
                       g.times_monomial(gb.leading[j].quotient_of(l)).scaled(cg.inverse());
      if (!reduce(gb, s).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasisBigraded& gb, const BiDegree& deg) {
  std::vector<Monomial> out;
  for (const auto& u : monomials_of(deg, gb.dims)) {
    const bool divisible = std::any_of(gb.leading.begin(), gb.leading.end(),
                                       [&](const Monomial& l) { return l.divides(u); });
    if (!divisible) out.push_back(u);
  }
  return out;
}

std::size_t hilbert_from_leading(const std::vector<Monomial>& leading, const BiDegree& deg,
                                 const RingDims& dims) {
  std::size_t count = 0;
  for (const auto& u : monomials_of(deg, dims)) {
    if (std::none_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(u); })) {
      ++count;
    }
  }
  return count;
}

namespace {

std::vector<BiginGenerator> leading_generators(const GroebnerBasisBigraded& gb) {
  std::vector<BiginGenerator> out;
  for (const auto& l : gb.leading) out.push_back({l, l.bidegree()});
  std::sort(out.begin(), out.end(), [](const BiginGenerator& a, const BiginGenerator& b) {
    if (!(a.degree == b.degree)) return a.degree < b.degree;
    return MonomialOrder::drl().greater(a.monomial, b.monomial);
  });
  return out;
}

bool same_generators(const std::vector<BiginGenerator>& a, const std::vector<BiginGenerator>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].monomial == b[i].monomial)) return false;
  }
  return true;
}

}  // namespace

BiginResult bigin(const BiSystem& sys, std::uint64_t seed, bool generic) {
  const BiSystem base = sys.field.is_prime() ? sys : sys.over(FieldSpec::prime(kDefaultPrime));
  BiginResult result;
  if (auto w = base.field.modulus() < 1000 ? std::string("small field: genericity of the coordinate change is unreliable") : std::string();
      !w.empty()) {
    result.warnings.push_back(w);
  }
  const int runs = generic ? kBiginSeeds : 1;
  for (int k = 0; k < runs; ++k) {
    BiSystem changed{base.dims, base.field, {}};
    if (generic) {
      const std::uint64_t s = seed + 104729ull * static_cast<std::uint64_t>(k);
      DenseMatrix tx, ty;
      for (std::uint64_t attempt = 0;; ++attempt) {
        tx = random_invertible(static_cast<std::size_t>(base.dims.nx()), base.field, s + 2 * attempt);
        ty = random_invertible(static_cast<std::size_t>(base.dims.ny()), base.field, s + 2 * attempt + 1);
        if (rank(tx) == tx.rows() && rank(ty) == ty.rows()) break;
        if (attempt == 4) throw Error(Errc::CoordinateChangeFailed, "singular coordinate change");
      }
      for (const auto& g : base.generators) changed.generators.push_back(substitute_linear(g, tx, ty));
    } else {
      changed = base;
    }
    result.per_seed.push_back(leading_generators(buchberger(changed, MonomialOrder::drl())));
  }
  result.generators = result.per_seed.front();
  result.stable = true;
  for (std::size_t k = 1; k < result.per_seed.size(); ++k) {
    if (!same_generators(result.per_seed[k], result.per_seed.front())) result.stable = false;
  }
  if (!result.stable) {
    // majority vote across the seeds
    for (std::size_t k = 0; k < result.per_seed.size(); ++k) {
      std::size_t votes = 0;
      for (const auto& other : result.per_seed) votes += same_generators(result.per_seed[k], other);
      if (2 * votes > result.per_seed.size()) {
        result.generators = result.per_seed[k];
        break;
      }
    }
    result.warnings.push_back("SeedInstability: coordinate changes disagree on the initial ideal");
  }
  return result;
}

std::vector<BiDegree> bigin_degrees(const BiginResult& r) {
  std::vector<BiDegree> out;
  for (const auto& g : r.generators) out.push_back(g.degree);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConsistencyReport consistency_report(const std::vector<AdmissibleProbe>& probes,
                         const std::vector<BiDegree>& degrees) {
  ConsistencyReport report;
  for (const auto& p : probes) {
    if (!p.admissible) continue;
    // admissible at every tested (a, b') with b' >= b
    const bool column_ok = std::all_of(probes.begin(), probes.end(), [&](const AdmissibleProbe& q) {
      return q.degree.a != p.degree.a || q.degree.b < p.degree.b || q.admissible;
    });
    if (!column_ok) continue;
    report.checked.push_back(p.degree);
    const BiDegree forbidden{p.degree.a + 1, p.degree.b};
    for (const auto& d : degrees) {
      if (d == forbidden) report.violations.push_back({p.degree, d});
    }
  }
  report.consistent = report.violations.empty();
  report.status = report.consistent
                      ? "consistent: no bigin generator at (a+1,b) above an admissible column"
                      : "violation: bigin generator found at (a+1,b) above an admissible column";
  return report;
}

}  // namespace biproj
