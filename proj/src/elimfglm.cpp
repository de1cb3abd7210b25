#include "biproj/elimfglm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "biproj/error.hpp"

namespace biproj {

ZOrder parse_zorder(const std::string& name) {
  if (name == "lex") return ZOrder::Lex;
  if (name == "drl" || name == "degrevlex" || name == "grevlex") return ZOrder::DegRevLex;
  throw Error(Errc::InvalidInput, "unknown order '" + name + "' (expected lex or drl)");
}

std::string zorder_name(ZOrder order) { return order == ZOrder::Lex ? "lex" : "drl"; }

int zcompare(ZOrder order, const ZMonomial& a, const ZMonomial& b) {
  if (order == ZOrder::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::string zmonomial_string(const ZMonomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ZPoly::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const ZTerm& t = terms[k];
    std::string c = t.coef.to_string();
    bool negative = !c.empty() && c.front() == '-';
    // residues print without sign; only rationals and doubles can be negative
    if (negative) c.erase(0, 1);
    const bool constant = std::all_of(t.mono.begin(), t.mono.end(), [](unsigned e) { return e == 0; });
    std::string body;
    if (constant) {
      body = c;
    } else if (c == "1") {
      body = zmonomial_string(t.mono, names);
    } else {
      body = c + "*" + zmonomial_string(t.mono, names);
    }
    if (k == 0) {
      out = (negative ? "-" : "") + body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::vector<std::string> GroebnerBasis::element_strings() const {
  std::vector<std::string> out;
  for (const auto& e : elements) out.push_back(e.to_string(variables));
  return out;
}

std::vector<std::string> GroebnerBasis::standard_strings() const {
  std::vector<std::string> out;
  for (const auto& s : standard_monomials) out.push_back(zmonomial_string(s, variables));
  return out;
}

std::vector<std::string> chart_names(const MultMapSet& maps) {
  std::vector<std::string> names;
  for (int j : maps.chart_indices) names.push_back("z" + std::to_string(j));
  return names;
}

namespace {

using Vec = std::vector<Scalar>;

Vec vectorize(const DenseMatrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  }
  return v;
}

Vec apply(const DenseMatrix& m, const Vec& v) {
  Vec out(m.rows(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!v[j].is_zero()) out[i] += m.at(i, j) * v[j];
    }
  }
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Incremental echelon form. Each stored row is reduced against the earlier
// ones and carries its expression in terms of the accepted monomials.
class Echelon {
 public:
  explicit Echelon(FieldSpec field) : field_(std::move(field)) {}

  // Returns the coefficients c with w = sum c_k s_k when w is dependent.
  std::optional<Vec> insert(Vec w) {
    Vec combo(rows_.size(), Scalar::zero(field_));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar& e = w[pivots_[k]];
      if (e.is_zero()) continue;
      const Scalar c = e;  // stored rows have pivot entry 1
      for (std::size_t j = pivots_[k]; j < w.size(); ++j) {
        if (!rows_[k][j].is_zero()) w[j] -= c * rows_[k][j];
      }
      for (std::size_t j = 0; j < combos_[k].size(); ++j) {
        if (!combos_[k][j].is_zero()) combo[j] += c * combos_[k][j];
      }
    }
    const auto pivot = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (pivot == w.end()) return combo;
    // new row r = w - combo.s, scaled so the pivot entry is 1
    const Scalar inv = pivot->inverse();
    for (auto& x : w) {
      if (!x.is_zero()) x *= inv;
    }
    Vec own(rows_.size() + 1, Scalar::zero(field_));
    for (std::size_t j = 0; j < combo.size(); ++j) own[j] = -combo[j] * inv;
    own.back() = inv;
    for (auto& c : combos_) c.push_back(Scalar::zero(field_));
    pivots_.push_back(static_cast<std::size_t>(pivot - w.begin()));
    rows_.push_back(std::move(w));
    combos_.push_back(std::move(own));
    return std::nullopt;
  }

 private:
  FieldSpec field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;
};

struct Candidate {
  ZMonomial mono;
  std::size_t parent;  // index into the standard list
  std::size_t var;
};

// Generic FGLM loop; `image(parent_payload, var)` produces the payload of
// z_var * standard[parent], and `flatten` turns a payload into the vector
// tested for dependence.
template <class Payload, class Step, class Flatten>
GroebnerBasis fglm_loop(std::size_t nvars, ZOrder order, const std::vector<std::string>& names,
                        const FieldSpec& field, Payload one, Step step, Flatten flatten) {
  GroebnerBasis gb;
  gb.variables = names;
  gb.order = order;
  std::vector<Payload> payloads;
  Echelon ech(field);
  const ZMonomial unit(nvars, 0);
  if (ech.insert(flatten(one)).has_value()) {
    // zero algebra: 1 itself vanishes
    gb.elements.push_back({{{unit, Scalar::one(field)}}});
    return gb;
  }
  gb.standard_monomials.push_back(unit);
  payloads.push_back(std::move(one));

  auto less = [&](const Candidate& a, const Candidate& b) { return zcompare(order, a.mono, b.mono) < 0; };
  std::vector<Candidate> frontier;
  auto push_neighbours = [&](std::size_t idx) {
    for (std::size_t v = 0; v < nvars; ++v) {
      ZMonomial m = gb.standard_monomials[idx];
      ++m[v];
      const bool known = std::any_of(frontier.begin(), frontier.end(),
                                     [&](const Candidate& c) { return c.mono == m; });
      if (!known) frontier.push_back({m, idx, v});
    }
  };
  auto divisible = [&](const ZMonomial& m) {
    return std::any_of(gb.elements.begin(), gb.elements.end(), [&](const ZPoly& g) {
      const ZMonomial& l = g.leading();
      for (std::size_t i = 0; i < nvars; ++i) {
        if (l[i] > m[i]) return false;
      }
      return true;
    });
  };
  push_neighbours(0);
  while (!frontier.empty()) {
    const auto it = std::min_element(frontier.begin(), frontier.end(), less);
    const Candidate cand = *it;
    frontier.erase(it);
    if (divisible(cand.mono)) continue;
    Payload p = step(payloads[cand.parent], cand.var);
    if (auto combo = ech.insert(flatten(p))) {
      ZPoly g;
      g.terms.push_back({cand.mono, Scalar::one(field)});
      for (std::size_t k = gb.standard_monomials.size(); k-- > 0;) {
        if (!(*combo)[k].is_zero()) g.terms.push_back({gb.standard_monomials[k], -(*combo)[k]});
      }
      std::sort(g.terms.begin() + 1, g.terms.end(), [&](const ZTerm& a, const ZTerm& b) {
        return zcompare(order, a.mono, b.mono) > 0;
      });
      gb.elements.push_back(std::move(g));
    } else {
      gb.standard_monomials.push_back(cand.mono);
      payloads.push_back(std::move(p));
      push_neighbours(gb.standard_monomials.size() - 1);
    }
  }
  std::sort(gb.elements.begin(), gb.elements.end(), [&](const ZPoly& a, const ZPoly& b) {
    return zcompare(order, a.leading(), b.leading()) > 0;
  });
  std::sort(gb.standard_monomials.begin(), gb.standard_monomials.end(),
            [&](const ZMonomial& a, const ZMonomial& b) { return zcompare(order, a, b) < 0; });
  return gb;
}

void check_maps(const std::vector<DenseMatrix>& maps, const std::vector<std::string>& names) {
  if (maps.size() != names.size()) throw Error(Errc::InvalidInput, "one name per map is required");
  for (const auto& m : maps) {
    if (!m.square() || m.rows() != maps.front().rows()) {
      throw Error(Errc::InvalidInput, "maps must be square of equal size");
    }
    if (!m.field().is_exact()) throw Error(Errc::InexactField, "FGLM needs an exact field");
  }
}

Vec random_vector(std::size_t d, const FieldSpec& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vec v;
  for (std::size_t i = 0; i < d; ++i) {
    if (field.is_prime()) {
      std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
      v.push_back(Scalar::from_residue(dist(rng), field));
    } else {
      std::uniform_int_distribution<long> dist(-50, 50);
      v.push_back(Scalar::from_int(dist(rng), field));
    }
  }
  return v;
}

}  // namespace

GroebnerBasis matrix_fglm(const std::vector<DenseMatrix>& maps, ZOrder order,
                          const std::vector<std::string>& names) {
  check_maps(maps, names);
  if (maps.empty()) throw Error(Errc::InvalidInput, "no maps");
  const FieldSpec field = maps.front().field();
  return fglm_loop(
      maps.size(), order, names, field, DenseMatrix::identity(maps.front().rows(), field),
      [&](const DenseMatrix& parent, std::size_t v) { return maps[v] * parent; }, vectorize);
}

GroebnerBasis matrix_fglm(const MultMapSet& maps, ZOrder order) {
  return matrix_fglm(maps.maps, order, chart_names(maps));
}

VectorFglmResult randomized_vector_fglm(const std::vector<DenseMatrix>& maps, ZOrder order,
                                        const std::vector<std::string>& names, std::uint64_t seed,
                                        const std::optional<std::vector<Scalar>>& forced_v) {
  check_maps(maps, names);
  if (maps.empty()) throw Error(Errc::InvalidInput, "no maps");
  const FieldSpec field = maps.front().field();
  const std::size_t d = maps.front().rows();
  const Vec v = forced_v ? *forced_v : random_vector(d, field, seed);
  if (v.size() != d) throw Error(Errc::InvalidInput, "start vector has the wrong length");
  VectorFglmResult result;
  if (d > 0 && is_zero_vec(v)) {
    result.basis = matrix_fglm(maps, order, names);
    result.fell_back = true;
    result.reason = "degenerate start vector v = 0";
    return result;
  }
  result.basis = fglm_loop(
      maps.size(), order, names, field, v,
      [&](const Vec& parent, std::size_t k) { return apply(maps[k], parent); },
      [](const Vec& x) { return x; });
  if (!vanishes_on_maps(result.basis, maps)) {
    result.basis = matrix_fglm(maps, order, names);
    result.fell_back = true;
    result.reason = "a relation found on M^alpha v does not vanish on the maps";
  }
  return result;
}

DenseMatrix evaluate_at_maps(const ZPoly& p, const std::vector<DenseMatrix>& maps) {
  const std::size_t d = maps.empty() ? 0 : maps.front().rows();
  const FieldSpec field = maps.empty() ? FieldSpec::rationals() : maps.front().field();
  DenseMatrix total(d, d, field);
  for (const auto& t : p.terms) {
    DenseMatrix m = DenseMatrix::identity(d, field);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) m = maps[i] * m;
    }
    total += m.scaled(t.coef);
  }
  return total;
}

bool vanishes_on_maps(const GroebnerBasis& gb, const std::vector<DenseMatrix>& maps) {
  return std::all_of(gb.elements.begin(), gb.elements.end(),
                     [&](const ZPoly& g) { return evaluate_at_maps(g, maps).is_zero(); });
}

std::complex<double> evaluate(const ZPoly& p, const std::vector<std::complex<double>>& z) {
  std::complex<double> total = 0.0;
  for (const auto& t : p.terms) {
    std::complex<double> term = t.coef.to_double();
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) term *= z[i];
    }
    total += term;
  }
  return total;
}

}  // namespace biproj
