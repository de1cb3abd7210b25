#include "biproj/commands.hpp"

#include <sstream>

#include "biproj/elimfglm.hpp"
#include "biproj/gb.hpp"
#include "biproj/macaulay.hpp"
#include "biproj/multmap.hpp"
#include "biproj/numeigen.hpp"
#include "biproj/system_io.hpp"
#include "biproj/verify.hpp"

namespace biproj {

using nlohmann::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidInput:
    case Errc::NotPrime:
    case Errc::SyntaxError:
    case Errc::NotBihomogeneous:
    case Errc::ZeroPoint:
    case Errc::DegreeMismatch:
    case Errc::DegreeTooLarge:
      return kExitInput;
    default:
      return kExitDomain;
  }
}

std::string CommandOutput::rendered(const RunConfig& config) const {
  const OutputFormat fmt =
      config.out.value_or(config.command == "hilbert" ? OutputFormat::Text : OutputFormat::Json);
  if (fmt == OutputFormat::Json || text.empty()) return json.dump(2) + "\n";
  return text;
}

namespace {

json degree_json(const BiDegree& d) { return json::array({d.a, d.b}); }

json complex_json(const Complex& z, bool real) {
  if (real) return z.real();
  return json::array({z.real(), z.imag()});
}

std::string rational_string(const Rational& q) { return q.get_str(); }

json matrix_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json report_json(const MembershipReport& r) {
  json j = {{"point", r.point},
            {"b_used", r.b_used},
            {"rank", r.rank},
            {"full_rank", r.full_rank},
            {"verdict", verdict_name(r.verdict)},
            {"margin", r.margin},
            {"mode", r.numeric ? "numeric" : "exact"}};
  if (r.numeric) j["tol"] = r.tol;
  return j;
}

json certificate_json(const AdmissibleCertificate& c) {
  return {{"degree", degree_json(c.degree)},
          {"form", c.form.to_string()},
          {"hf", c.hf_value},
          {"seeds_tried", c.seeds_tried},
          {"warnings", c.warnings}};
}

json with_header(const std::string& command, json body) {
  json j = {{"schema", 1}, {"command", command}};
  j.update(body);
  return j;
}

// Without --h the chart form is x0 when it is admissible (so z_i = x_i/x0),
// otherwise the random form of the certificate.
AdmissibleCertificate certificate_for(const BiSystem& sys, const RunConfig& config, SearchStrategy strategy,
                                      bool prefer_x0) {
  std::optional<BiPoly> h;
  if (config.h) h = parse_poly(*config.h, sys.dims, sys.field);
  if (!h && prefer_x0) {
    const BiPoly x0 = BiPoly::monomial(sys.dims, Monomial::variable(sys.dims, 0), Scalar::one(sys.field));
    if (config.degree) {
      if (auto cert = is_admissible(sys, *config.degree, x0, config.seed)) return *cert;
    } else {
      SearchOptions options;
      options.strategy = strategy;
      options.seed = config.seed;
      const AdmissibleCertificate found = find_admissible(sys, options);
      if (auto cert = is_admissible(sys, found.degree, x0, config.seed)) return *cert;
      return found;
    }
  }
  if (config.degree) {
    auto cert = is_admissible(sys, *config.degree, h, config.seed);
    if (!cert) {
      throw Error(Errc::NotAdmissible, config.degree->to_string() + " is not admissible" +
                                         (h ? " for h = " + h->to_string() : " (3 random forms tried)"));
    }
    return *cert;
  }
  SearchOptions options;
  options.strategy = strategy;
  options.seed = config.seed;
  AdmissibleCertificate cert = find_admissible(sys, options);
  if (h) {
    auto with_h = is_admissible(sys, cert.degree, h, config.seed);
    if (!with_h) throw Error(Errc::NotAdmissible, "h = " + h->to_string() + " is not admissible at " + cert.degree.to_string());
    return *with_h;
  }
  return cert;
}

json points_json(const PointSet& ps) {
  json pts = json::array();
  for (const auto& p : ps.points) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(complex_json(c, p.real));
    json chart = json::array();
    for (const auto& c : p.chart) chart.push_back(complex_json(c, p.real));
    json jp = {{"coords", coords},
               {"chart", chart},
               {"multiplicity", p.multiplicity},
               {"residual", p.residual},
               {"real", p.real}};
    if (p.exact) {
      json ex = json::array();
      for (const auto& q : *p.exact) ex.push_back(rational_string(q));
      jp["exact"] = ex;
    }
    if (!p.real) jp["conjugate_pair"] = p.conjugate_pair;
    pts.push_back(jp);
  }
  return pts;
}

std::string coords_text(const RecoveredPoint& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) os << ":";
    if (p.exact) {
      os << (*p.exact)[i].get_str();
    } else if (p.real) {
      os << p.coords[i].real();
    } else {
      os << p.coords[i].real() << (p.coords[i].imag() < 0 ? "-" : "+") << std::abs(p.coords[i].imag()) << "i";
    }
  }
  os << "]";
  return os.str();
}

MembershipReport verify_point(const BiSystem& sys, const RecoveredPoint& p, double tol) {
  if (p.exact && sys.field.is_rational()) {
    std::vector<Scalar> xi;
    for (const auto& q : *p.exact) xi.push_back(Scalar::from_rational(q, sys.field));
    return verify_exact(sys, xi);
  }
  return verify_numeric(sys, p.coords, tol);
}

CommandOutput cmd_hilbert(const BiSystem& sys, const RunConfig& config) {
  if (config.amax < 0 || config.bmax < 0) throw Error(Errc::InvalidInput, "--amax/--bmax must be nonnegative");
  CommandOutput out;
  json table = json::array();
  std::ostringstream csv;
  csv << "a\\b";
  for (int b = 0; b <= config.bmax; ++b) csv << "," << b;
  csv << "\n";
  for (int a = 0; a <= config.amax; ++a) {
    json row = json::array();
    csv << a;
    for (int b = 0; b <= config.bmax; ++b) {
      const std::size_t v = hilbert_function(sys, {a, b});
      row.push_back(v);
      csv << "," << v;
    }
    csv << "\n";
    table.push_back(row);
  }
  out.json = with_header("hilbert", {{"amax", config.amax}, {"bmax", config.bmax}, {"table", table}});
  out.text = csv.str();
  return out;
}

CommandOutput cmd_admissible(const BiSystem& sys, const RunConfig& config) {
  CommandOutput out;
  const AdmissibleCertificate cert = certificate_for(sys, config, SearchStrategy::RowMajor, false);
  out.json = with_header("admissible", certificate_json(cert));
  out.text = "admissible " + cert.degree.to_string() + " with h = " + cert.form.to_string() +
             ", HF = " + std::to_string(cert.hf_value) + "\n";
  return out;
}

CommandOutput cmd_bounds(const BiSystem& sys) {
  CommandOutput out;
  const BiDegree mac = macaulay_bound(sys);
  const BiDegree kos = koszul_bound(sys);
  const int stab = projection_stab_degree(sys);
  out.json = with_header("bounds", {{"macaulay", degree_json(mac)},
                                    {"koszul", degree_json(kos)},
                                    {"stab_b", stab},
                                    {"warnings", json::array({kMacaulayBoundWarning})}});
  out.text = "macaulay " + mac.to_string() + "\nkoszul " + kos.to_string() + "\nstab_b " +
             std::to_string(stab) + "\n";
  return out;
}

CommandOutput cmd_multmaps(const BiSystem& sys, const RunConfig& config) {
  CommandOutput out;
  const AdmissibleCertificate cert = certificate_for(sys, config, SearchStrategy::RowMajor, true);
  const MultMapSet set = build_mult_maps(sys, cert);
  json basis = json::array();
  for (const auto& u : set.basis.basis()) basis.push_back(u.to_string());
  json maps = json::array();
  for (const auto& m : set.maps) maps.push_back(matrix_json(m));
  const auto names = chart_names(set);
  out.json = with_header("multmaps", {{"degree", degree_json(set.degree)},
                                      {"h", set.h.to_string()},
                                      {"variables", names},
                                      {"basis", basis},
                                      {"maps", maps}});
  std::ostringstream os;
  os << "degree " << set.degree.to_string() << ", h = " << set.h.to_string() << ", D = " << set.dim() << "\n";
  for (std::size_t i = 0; i < set.maps.size(); ++i) os << "M_" << names[i] << " =\n" << set.maps[i].to_string();
  out.text = os.str();
  return out;
}

CommandOutput cmd_solve(const BiSystem& sys, const RunConfig& config) {
  CommandOutput out;
  const ZOrder order = parse_zorder(config.order);
  const BiDegree kos = koszul_bound(sys);
  const int stab = projection_stab_degree(sys);
  const AdmissibleCertificate cert = certificate_for(sys, config, SearchStrategy::ProjectionStable, true);
  const MultMapSet set = build_mult_maps(sys, cert);
  const auto names = chart_names(set);
  GroebnerBasis gb;
  json fglm = {{"randomized", config.randomized}};
  if (config.randomized) {
    const VectorFglmResult r = randomized_vector_fglm(set.maps, order, names, config.seed);
    gb = r.basis;
    fglm["fell_back"] = r.fell_back;
    if (r.fell_back) fglm["reason"] = r.reason;
  } else {
    gb = matrix_fglm(set, order);
  }
  json body = {{"degree_used", degree_json(set.degree)},
               {"h", set.h.to_string()},
               {"bounds", {{"koszul", degree_json(kos)}, {"stab_b", stab}}},
               {"variables", names},
               {"order", zorder_name(order)},
               {"basis", gb.element_strings()},
               {"standard_monomials", gb.standard_strings()},
               {"dim", gb.standard_monomials.size()},
               {"quotient_dim", set.dim()},
               {"fglm", fglm}};
  std::ostringstream os;
  os << "degree " << set.degree.to_string() << ", h = " << set.h.to_string() << "\n";
  os << zorder_name(order) << " basis:";
  for (const auto& s : gb.element_strings()) os << "\n  " << s;
  os << "\n";
  if (sys.field.is_rational() && set.dim() > 0) {
    const double tol = config.tol.value_or(kDefaultEigenTol);
    const PointSet ps = recover_points(set, config.seed, tol, &gb);
    json pts = points_json(ps);
    for (std::size_t i = 0; i < ps.points.size(); ++i) {
      const MembershipReport rep = verify_point(sys, ps.points[i], config.tol.value_or(kDefaultVerifyTol));
      pts[i]["membership"] = report_json(rep);
      pts[i]["extraneous"] = rep.verdict == Verdict::NotInProjection;
      os << "point " << coords_text(ps.points[i]) << " multiplicity " << ps.points[i].multiplicity << ": "
         << verdict_name(rep.verdict) << (rep.verdict == Verdict::NotInProjection ? " (extraneous)" : "") << "\n";
    }
    body["points"] = pts;
  } else {
    body["points"] = json::array();
    if (!sys.field.is_rational()) body["points_skipped"] = "points are recovered only over Q";
  }
  out.json = with_header("solve", body);
  out.text = os.str();
  return out;
}

CommandOutput cmd_eigen(const BiSystem& sys, const RunConfig& config) {
  CommandOutput out;
  if (!sys.field.is_rational()) throw Error(Errc::PrimeFieldEigen, "eigen needs a system over Q");
  const AdmissibleCertificate cert = certificate_for(sys, config, SearchStrategy::ProjectionStable, true);
  const MultMapSet set = build_mult_maps(sys, cert);
  const PointSet ps = recover_points(set, config.seed, config.tol.value_or(kDefaultEigenTol));
  out.json = with_header("eigen", {{"degree_used", degree_json(ps.degree_used)},
                                   {"h", set.h.to_string()},
                                   {"variables", chart_names(set)},
                                   {"total_dim", ps.total_dim},
                                   {"points", points_json(ps)}});
  std::ostringstream os;
  os << "degree " << ps.degree_used.to_string() << ", D = " << ps.total_dim << "\n";
  for (const auto& p : ps.points) {
    os << "point " << coords_text(p) << " multiplicity " << p.multiplicity << " residual " << p.residual << "\n";
  }
  out.text = os.str();
  return out;
}

std::vector<std::string> split_point(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '[' && ch != ']') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

CommandOutput cmd_verify(const BiSystem& sys, const RunConfig& config) {
  CommandOutput out;
  if (config.point.empty()) throw Error(Errc::InvalidInput, "--point is required");
  const auto parts = split_point(config.point);
  MembershipReport rep;
  if (config.numeric || !sys.field.is_exact()) {
    std::vector<Complex> xi;
    for (const auto& s : parts) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty()) throw Error(Errc::InvalidInput, "bad coordinate '" + s + "'");
      xi.emplace_back(v, 0.0);
    }
    rep = verify_numeric(sys, xi, config.tol.value_or(kDefaultVerifyTol));
  } else {
    std::vector<Scalar> xi;
    for (const auto& s : parts) xi.push_back(Scalar::from_rational(parse_rational(s), sys.field));
    rep = verify_exact(sys, xi);
  }
  out.json = with_header("verify", report_json(rep));
  out.text = verdict_name(rep.verdict) + " (b = " + std::to_string(rep.b_used) + ", rank " +
             std::to_string(rep.rank) + " of " + std::to_string(rep.full_rank) + ")\n";
  return out;
}

CommandOutput cmd_gb(const BiSystem& sys, const RunConfig& config) {
  CommandOutput out;
  MonomialOrder order = MonomialOrder::drl();
  if (config.order == "lex") {
    order = MonomialOrder::lex();
  } else if (config.order != "drl") {
    throw Error(Errc::InvalidInput, "unknown order '" + config.order + "' (expected drl or lex)");
  }
  const GroebnerBasisBigraded gb = buchberger(sys, order);
  json basis = json::array();
  json leading = json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    basis.push_back(gb.elements[i].to_string());
    leading.push_back(gb.leading[i].to_string());
    os << gb.elements[i].to_string() << "\n";
  }
  out.json = with_header("gb", {{"order", order.name()}, {"basis", basis}, {"leading", leading}});
  out.text = os.str();
  return out;
}

CommandOutput cmd_bigin(const BiSystem& sys, const RunConfig& config) {
  CommandOutput out;
  const BiginResult r = bigin(sys, config.seed, !config.identity);
  json gens = json::array();
  std::ostringstream os;
  for (const auto& g : r.generators) {
    gens.push_back({{"monomial", g.monomial.to_string()}, {"bidegree", degree_json(g.degree)}});
    os << g.degree.to_string() << " " << g.monomial.to_string() << "\n";
  }
  json degs = json::array();
  for (const auto& d : bigin_degrees(r)) degs.push_back(degree_json(d));
  out.json = with_header("bigin", {{"generators", gens},
                                   {"bidegrees", degs},
                                   {"stable", r.stable},
                                   {"warnings", r.warnings}});
  os << (r.stable ? "stable across seeds\n" : "seed instability\n");
  out.text = os.str();
  return out;
}

}  // namespace

CommandOutput run_command(const RunConfig& config) {
  try {
    const BiSystem sys = load_system(config.system_path, config.field);
    const std::string& c = config.command;
    if (c == "hilbert") return cmd_hilbert(sys, config);
    if (c == "admissible") return cmd_admissible(sys, config);
    if (c == "bounds") return cmd_bounds(sys);
    if (c == "multmaps") return cmd_multmaps(sys, config);
    if (c == "solve") return cmd_solve(sys, config);
    if (c == "eigen") return cmd_eigen(sys, config);
    if (c == "verify") return cmd_verify(sys, config);
    if (c == "gb") return cmd_gb(sys, config);
    if (c == "bigin") return cmd_bigin(sys, config);
    throw Error(Errc::InvalidInput, "unknown command '" + c + "'");
  } catch (const Error& e) {
    CommandOutput out;
    out.exit_code = exit_code_for(e.code());
    out.json = with_header(config.command, {{"error", {{"code", std::string(errc_name(e.code()))},
                                                       {"message", e.what()}}}});
    out.text = std::string("error: ") + e.what() + "\n";
    return out;
  }
}

}  // namespace biproj
