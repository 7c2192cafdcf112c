#include "toralsym/report.hpp"

#include <sstream>

namespace toralsym {

using json = nlohmann::ordered_json;

AnalysisReport analyze(const IntMatrix& m, const AnalyzeOptions& opt) {
  AnalysisReport rep;
  rep.options = opt;
  rep.input = m;
  rep.determinant = det(m);
  rep.unimodular = (rep.determinant == 1 || rep.determinant == -1);
  if (!rep.unimodular && !opt.allow_nonunimodular)
    throw unimodularity_error("analyze: input is not unimodular (pass --allow-nonunimodular)");
  rep.char_poly = charpoly(m);
  rep.factorization = factor_over_Z(rep.char_poly);
  rep.commutant_rank = commutant_basis(m).rank();
  if (!rep.unimodular) {
    // ring-of-matrices setting: commutant and weak reversibility only
    rep.reversibility = ReversibilityReport{};
    rep.reversibility->weak_witness = weak_reversibility_search(m, opt.torsion_radius);
    if (rep.reversibility->weak_witness)
      rep.reversibility->weak_det = det(*rep.reversibility->weak_witness);
    return rep;
  }
  rep.invariants = polynomial_invariants(m);
  rep.cyclic = rep.invariants->q.size() == 1;
  rep.simple = poly_is_squarefree(rep.char_poly);
  rep.semisimple = poly_is_squarefree(rep.invariants->minimal_polynomial());
  rep.group = centralizer_structure(m, opt.torsion_radius);
  rep.torsion = torsion_search(m, opt.torsion_radius);
  rep.reversibility =
      analyze_reversibility(m, opt.reversor_radius, opt.projective, opt.torsion_radius);
  if (opt.orbit_depth > 0) rep.orbits = orbit_table(m, opt.orbit_depth);
  return rep;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json rat_matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

namespace {

json poly_to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(c.get_str());
  return json{{"text", p.to_string()}, {"coefficients", coeffs}};
}

json search_to_json(const WitnessSearch& s) {
  json out;
  switch (s.verdict) {
    case SearchVerdict::found: out["verdict"] = "found"; break;
    case SearchVerdict::none_within_radius: out["verdict"] = "none_within_radius"; break;
    case SearchVerdict::excluded: out["verdict"] = "excluded"; break;
  }
  out["witness"] = s.witness ? matrix_to_json(*s.witness) : json(nullptr);
  out["radius"] = s.radius;
  out["module_rank"] = s.module_rank;
  out["path"] = s.path;
  return out;
}

json reversor_orders_to_json(const ReversorOrderAnalysis& a) {
  json out;
  out["witness_valid"] = a.witness_valid;
  out["applicable"] = a.applicable;
  out["reason"] = a.reason;
  if (a.g_squared_in_commutant) {
    json coords = json::array();
    for (const Int& c : *a.g_squared_in_commutant) coords.push_back(c.get_str());
    out["g_squared_commutant_coordinates"] = coords;
  } else {
    out["g_squared_commutant_coordinates"] = nullptr;
  }
  if (a.g_squared_signed_power) {
    out["g_squared_signed_power"] = {{"sign", a.g_squared_signed_power->first},
                                     {"exponent", a.g_squared_signed_power->second}};
  } else {
    out["g_squared_signed_power"] = nullptr;
  }
  out["g_fourth_is_identity"] = a.g_fourth_is_identity;
  out["minimal_reversor_order"] =
      a.minimal_reversor_order ? json(*a.minimal_reversor_order) : json(nullptr);
  out["involutory_reversor_in_family"] = a.involutory_in_family;
  out["involutory_witness"] =
      a.involutory_witness ? matrix_to_json(*a.involutory_witness) : json(nullptr);
  out["semidirect_confirmed"] = a.semidirect_confirmed;
  return out;
}

json reversibility_to_json(const ReversibilityReport& r, bool full) {
  json out;
  if (full) {
    out["necessary"] = {{"self_reciprocal", r.necessary.self_reciprocal},
                        {"det_ok", r.necessary.det_ok},
                        {"parity_obstruction", r.necessary.parity_obstruction
                                                   ? json(*r.necessary.parity_obstruction)
                                                   : json(nullptr)}};
    out["structural"] = {{"symplectic", r.structural.is_symplectic},
                         {"symmetric_symplectic", r.structural.is_symmetric_symplectic},
                         {"skew_symplectic", r.structural.is_skew_symplectic},
                         {"integer_orthogonal", r.structural.is_integer_orthogonal}};
    out["q_reversible"] = r.q_reversible;
    out["q_reversor"] = r.q_reversor ? rat_matrix_to_json(*r.q_reversor) : json(nullptr);
    out["z_search"] = search_to_json(r.z_search);
    out["pgl_search"] = r.pgl_search ? search_to_json(*r.pgl_search) : json(nullptr);
  }
  out["weak"] = {{"witness", r.weak_witness ? matrix_to_json(*r.weak_witness) : json(nullptr)},
                 {"det", r.weak_det ? json(r.weak_det->get_str()) : json(nullptr)}};
  if (full)
    out["reversor_orders"] =
        r.reversor_orders ? reversor_orders_to_json(*r.reversor_orders) : json(nullptr);
  return out;
}

json orbit_rows_to_json(const std::vector<OrbitRow>& rows) {
  json arr = json::array();
  for (const OrbitRow& r : rows) {
    arr.push_back({{"k", r.k},
                   {"a", r.a ? json(r.a->get_str()) : json(nullptr)},
                   {"c", r.c ? json(r.c->get_str()) : json(nullptr)},
                   {"degenerate", r.degenerate}});
  }
  return arr;
}

std::string search_verdict_text(const WitnessSearch& s) {
  switch (s.verdict) {
    case SearchVerdict::found: return "found (" + s.path + ")";
    case SearchVerdict::none_within_radius:
      return "none within radius " + std::to_string(s.radius) + " (module rank " +
             std::to_string(s.module_rank) + "); existence undecided";
    case SearchVerdict::excluded: return "excluded: " + s.path;
  }
  return "";
}

}  // namespace

json report_to_json(const AnalysisReport& rep) {
  json out;
  out["schema"] = kSchema;
  out["tool"] = {{"name", "toralsym"}, {"version", kToolVersion}};
  out["options"] = {{"torsion_radius", rep.options.torsion_radius},
                    {"reversor_radius", rep.options.reversor_radius},
                    {"orbit_depth", rep.options.orbit_depth},
                    {"projective", rep.options.projective},
                    {"allow_nonunimodular", rep.options.allow_nonunimodular}};
  out["input"] = {{"n", rep.input.dim()},
                  {"rows", matrix_to_json(rep.input)},
                  {"det", rep.determinant.get_str()},
                  {"unimodular", rep.unimodular}};
  out["charpoly"] = poly_to_json(rep.char_poly);
  json fac = json::array();
  for (const auto& [f, mult] : rep.factorization.factors)
    fac.push_back({{"factor", poly_to_json(f)}, {"multiplicity", mult}});
  out["factorization"] = fac;
  if (rep.invariants) {
    json q = json::array();
    for (const IntPolynomial& qi : rep.invariants->q) q.push_back(poly_to_json(qi));
    out["invariant_factors"] = {{"ell", rep.invariants->ell},
                                {"q", q},
                                {"minimal_polynomial", poly_to_json(rep.invariants->minimal_polynomial())}};
    out["flags"] = {{"cyclic", rep.cyclic}, {"simple", rep.simple}, {"semisimple", rep.semisimple}};
  } else {
    out["invariant_factors"] = nullptr;
    out["flags"] = nullptr;
  }
  json sym;
  sym["commutant_rank"] = rep.commutant_rank;
  if (rep.group) {
    sym["structure_known"] = rep.group->structure_known;
    if (rep.group->structure_known) {
      json tor = json::array();
      for (long d : rep.group->torsion) tor.push_back(d);
      sym["torsion"] = tor;
      sym["torsion_order"] = rep.group->torsion_order();
      sym["rank"] = rep.group->rank;
      sym["torsion_complete"] = rep.group->torsion_complete;
    }
  } else {
    sym["structure_known"] = false;
  }
  if (rep.torsion) {
    json gens = json::array();
    for (const IntMatrix& g : rep.torsion->generators) gens.push_back(matrix_to_json(g));
    sym["torsion_generators"] = gens;
    sym["box"] = {{"radius", rep.torsion->radius},
                  {"exhausted", rep.torsion->box_exhausted},
                  {"order3_found", rep.torsion->order3_found},
                  {"sqrt_of_m_found", rep.torsion->sqrt_of_m_found}};
  }
  out["symmetry"] = sym;
  out["reversibility"] =
      rep.reversibility ? reversibility_to_json(*rep.reversibility, rep.unimodular) : json(nullptr);
  out["orbits"] = rep.options.orbit_depth > 0 ? orbit_rows_to_json(rep.orbits) : json(nullptr);
  return out;
}

namespace {

std::string matrix_inline(const IntMatrix& m) { return m.to_string(); }

void human_reversibility(std::ostream& os, const AnalysisReport& rep) {
  const ReversibilityReport& r = *rep.reversibility;
  os << "reversibility:\n";
  if (rep.unimodular) {
    os << "  self-reciprocal charpoly: " << (r.necessary.self_reciprocal ? "yes" : "no") << "\n";
    os << "  determinant +-1: " << (r.necessary.det_ok ? "yes" : "no") << "\n";
    if (r.necessary.parity_obstruction)
      os << "  obstruction: " << *r.necessary.parity_obstruction << "\n";
    if (r.structural.is_symplectic)
      os << "  symplectic" << (r.structural.is_symmetric_symplectic ? " (symmetric)" : "")
         << (r.structural.is_skew_symplectic ? " (skew-symmetric)" : "") << "\n";
    if (r.structural.is_integer_orthogonal) os << "  integer orthogonal\n";
    os << "  reversible in GL(n,Q): " << (r.q_reversible ? "yes" : "no") << "\n";
    if (r.q_reversor) os << "  rational involutory reversor: " << r.q_reversor->to_string() << "\n";
    os << "  GL(n,Z) witness: " << search_verdict_text(r.z_search) << "\n";
    if (r.z_search.witness) os << "    G = " << matrix_inline(*r.z_search.witness) << "\n";
    if (r.pgl_search) {
      os << "  PGL(n,Z) witness (G M G^-1 = -M^-1): " << search_verdict_text(*r.pgl_search) << "\n";
      if (r.pgl_search->witness) {
        os << "    G = " << matrix_inline(*r.pgl_search->witness) << "\n";
        os << "    M^2 is then reversible in the classical sense\n";
      }
    }
  }
  os << "  weak reversibility (G = MGM, nonsingular): ";
  if (r.weak_witness)
    os << "G = " << matrix_inline(*r.weak_witness) << ", det " << r.weak_det->get_str() << "\n";
  else
    os << "none within radius\n";
  if (rep.unimodular && r.reversor_orders) {
    const ReversorOrderAnalysis& a = *r.reversor_orders;
    os << "  reversor orders: ";
    if (!a.witness_valid)
      os << "witness invalid\n";
    else if (!a.applicable)
      os << "family analysis inapplicable (" << a.reason << ")";
    else {
      os << "family t*M^k*G analyzed (" << a.reason << ")";
      if (a.g_squared_signed_power)
        os << "; G^2 = " << (a.g_squared_signed_power->first < 0 ? "-" : "") << "M^"
           << a.g_squared_signed_power->second;
      if (a.minimal_reversor_order)
        os << "; minimal reversor order " << *a.minimal_reversor_order;
      os << (a.involutory_in_family ? "; involutory reversor exists"
                                    : "; no involutory reversor");
    }
    if (a.witness_valid) {
      if (a.semidirect_confirmed) os << "; R(M) = S(M) x| C2 confirmed";
      os << "\n";
    }
  }
}

}  // namespace

std::string report_to_human(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "toralsym " << kToolVersion << "\n";
  os << "input: n = " << rep.input.dim() << ", M = " << matrix_inline(rep.input) << "\n";
  os << "det(M) = " << rep.determinant.get_str()
     << (rep.unimodular ? " (unimodular)" : " (not unimodular)") << "\n";
  os << "charpoly: " << rep.char_poly.to_string() << "\n";
  os << "factorization:";
  for (const auto& [f, mult] : rep.factorization.factors) {
    os << " (" << f.to_string() << ")";
    if (mult > 1) os << "^" << mult;
  }
  os << "\n";
  if (rep.invariants) {
    os << "invariant factors:";
    for (size_t i = 0; i < rep.invariants->q.size(); ++i)
      os << (i ? " | " : " ") << rep.invariants->q[i].to_string();
    os << "\n";
    os << "minimal polynomial: " << rep.invariants->minimal_polynomial().to_string() << "\n";
    os << "cyclic: " << (rep.cyclic ? "yes" : "no") << ", simple: " << (rep.simple ? "yes" : "no")
       << ", semisimple: " << (rep.semisimple ? "yes" : "no") << "\n";
  }
  os << "symmetry group:\n";
  os << "  commutant rank: " << rep.commutant_rank << "\n";
  if (rep.group && rep.group->structure_known) {
    os << "  S(M) = ";
    for (long d : rep.group->torsion) os << "C" << d << " x ";
    if (rep.group->rank == 0)
      os << "1 (finite)";
    else if (rep.group->rank == 1)
      os << "Z";
    else
      os << "Z^" << rep.group->rank;
    os << "   [torsion " << (rep.group->torsion_complete ? "complete" : "within radius only")
       << "]\n";
  } else {
    os << "  structure undetermined (input not simple); commutant rank reported only\n";
  }
  if (rep.torsion && !rep.torsion->generators.empty()) {
    os << "  torsion generators:";
    for (const IntMatrix& g : rep.torsion->generators) os << " " << matrix_inline(g);
    os << "\n";
  }
  if (rep.torsion) {
    if (rep.torsion->box_exhausted)
      os << "  in-box exclusions (radius " << rep.torsion->radius
         << "): third-order element " << (rep.torsion->order3_found ? "found" : "none")
         << ", square root of M " << (rep.torsion->sqrt_of_m_found ? "found" : "none") << "\n";
    else
      os << "  box scan skipped (commutant rank too large for radius "
         << rep.torsion->radius << ")\n";
  }
  if (rep.reversibility) human_reversibility(os, rep);
  if (rep.options.orbit_depth > 0) {
    os << "orbits (k, a_k, c_k):\n";
    for (const OrbitRow& r : rep.orbits) {
      os << "  " << r.k << "  ";
      if (r.degenerate)
        os << "degenerate (eigenvalue 1 of M^k)";
      else
        os << (r.a ? r.a->get_str() : "-") << "  " << (r.c ? r.c->get_str() : "-");
      os << "\n";
    }
  }
  return os.str();
}

VerifyResult verify_candidate(const IntMatrix& m, const IntMatrix& g, VerifyMode mode,
                              const std::optional<TorusPoint>& translation) {
  VerifyResult out;
  out.mode = mode;
  switch (mode) {
    case VerifyMode::symmetry: {
      out.ok = verify_symmetry(m, g);
      out.residual = m * g - g * m;
      out.detail = out.ok ? "G M = M G with G unimodular"
                          : (is_unimodular(g) ? "commutator M G - G M is nonzero"
                                              : "G is not unimodular");
      break;
    }
    case VerifyMode::reversor: {
      if (!is_unimodular(g)) {
        out.ok = false;
        out.detail = "G is not unimodular";
        break;
      }
      IntMatrix r = g * m * inverse_unimodular(g) * m;
      out.ok = r.is_identity();
      out.residual = r;
      out.detail = out.ok ? "G M G^-1 = M^-1" : "G M G^-1 M != 1 (residual shown)";
      break;
    }
    case VerifyMode::pgl_reversor: {
      if (!is_unimodular(g)) {
        out.ok = false;
        out.detail = "G is not unimodular";
        break;
      }
      IntMatrix r = g * m * inverse_unimodular(g) * m;
      out.ok = r == -IntMatrix::identity(m.dim());
      out.residual = r;
      out.detail = out.ok ? "G M G^-1 = -M^-1" : "G M G^-1 M != -1 (residual shown)";
      break;
    }
    case VerifyMode::weak: {
      IntMatrix r = m * g * m - g;
      out.ok = r.is_zero() && det(g) != 0;
      out.residual = r;
      out.candidate_det = det(g);
      out.detail = out.ok ? "G = M G M with G nonsingular"
                          : (r.is_zero() ? "G is singular" : "M G M - G is nonzero");
      break;
    }
    case VerifyMode::affine: {
      if (!translation) throw std::invalid_argument("affine mode requires a translation");
      bool as_symmetry = m * g == g * m;
      bool as_reversor = is_unimodular(g) && g * m == inverse_unimodular(m) * g;
      if (!as_symmetry && !as_reversor) {
        out.ok = false;
        out.detail = "G is neither a symmetry nor a reversing symmetry of M";
        break;
      }
      bool reversing = !as_symmetry;
      out.ok = affine_symmetry_check(*translation, g, m, reversing);
      out.detail = out.ok ? std::string("(t,G) is an affine ") +
                                (reversing ? "reversing symmetry" : "symmetry")
                          : "M t != t (mod 1)";
      break;
    }
  }
  return out;
}

json verify_to_json(const VerifyResult& r) {
  static const char* names[] = {"symmetry", "reversor", "pgl-reversor", "weak", "affine"};
  json out;
  out["schema"] = kSchema;
  out["mode"] = names[static_cast<int>(r.mode)];
  out["verified"] = r.ok;
  out["detail"] = r.detail;
  out["residual"] = r.residual ? matrix_to_json(*r.residual) : json(nullptr);
  out["candidate_det"] = r.candidate_det ? json(r.candidate_det->get_str()) : json(nullptr);
  return out;
}

std::string verify_to_human(const VerifyResult& r) {
  std::ostringstream os;
  os << (r.ok ? "verified: " : "NOT verified: ") << r.detail << "\n";
  if (!r.ok && r.residual) os << "residual: " << r.residual->to_string() << "\n";
  if (r.candidate_det) os << "det(G) = " << r.candidate_det->get_str() << "\n";
  return os.str();
}

json orbits_to_json(const IntMatrix& m, const std::vector<OrbitRow>& rows, int depth) {
  json out;
  out["schema"] = kSchema;
  out["input"] = {{"n", m.dim()}, {"rows", matrix_to_json(m)}};
  out["depth"] = depth;
  out["rows"] = orbit_rows_to_json(rows);
  OrbitData z;
  bool zeta_ok = true;
  for (const OrbitRow& r : rows)
    if (r.degenerate) zeta_ok = false;
  if (zeta_ok) {
    z = zeta_series(m, depth);
    json zl = json::array(), ze = json::array();
    for (const Rat& c : z.zeta_log) zl.push_back(c.get_str());
    for (const Rat& c : z.zeta) ze.push_back(c.get_str());
    out["zeta_log"] = zl;
    out["zeta"] = ze;
  } else {
    out["zeta_log"] = nullptr;
    out["zeta"] = nullptr;
  }
  return out;
}

std::string orbits_to_human(const std::vector<OrbitRow>& rows, const IntMatrix& m, int depth) {
  std::ostringstream os;
  os << "k   a_k   c_k\n";
  for (const OrbitRow& r : rows) {
    os << r.k << "   ";
    if (r.degenerate)
      os << "degenerate (eigenvalue 1 of M^" << r.k << ")";
    else
      os << (r.a ? r.a->get_str() : "-") << "   " << (r.c ? r.c->get_str() : "-");
    os << "\n";
  }
  bool zeta_ok = true;
  for (const OrbitRow& r : rows)
    if (r.degenerate) zeta_ok = false;
  if (zeta_ok) {
    OrbitData z = zeta_series(m, depth);
    os << "log zeta = ";
    for (int k = 1; k <= depth; ++k)
      os << (k > 1 ? " + " : "") << "(" << z.zeta_log[k].get_str() << ") t^" << k;
    os << " + O(t^" << depth + 1 << ")\n";
    os << "zeta     = 1";
    for (int k = 1; k <= depth; ++k) os << " + (" << z.zeta[k].get_str() << ") t^" << k;
    os << " + O(t^" << depth + 1 << ")\n";
  }
  return os.str();
}

IntMatrix parse_matrix(const std::string& content) {
  // JSON or whitespace tokens
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw parse_error("empty matrix input");
  if (content[first] == '{') {
    json j;
    try {
      j = json::parse(content);
    } catch (const std::exception& e) {
      throw parse_error(std::string("bad JSON matrix: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("rows")) throw parse_error("JSON matrix needs n and rows");
    int n = j["n"].get<int>();
    if (n < 1) throw parse_error("matrix dimension must be >= 1");
    const json& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw parse_error("rows must be an n-element array");
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
        throw parse_error("each row must have n entries");
      for (int jx = 0; jx < n; ++jx) {
        const json& e = rows[i][jx];
        if (e.is_number_integer())
          m.at(i, jx) = Int(static_cast<long>(e.get<long long>()));
        else if (e.is_string())
          m.at(i, jx) = Int(e.get<std::string>());
        else
          throw parse_error("matrix entries must be integers or integer strings");
      }
    }
    return m;
  }
  std::istringstream is(content);
  long n;
  if (!(is >> n) || n < 1) throw parse_error("matrix input must start with the dimension n >= 1");
  IntMatrix m(static_cast<int>(n), static_cast<int>(n));
  for (long i = 0; i < n * n; ++i) {
    std::string tok;
    if (!(is >> tok)) throw parse_error("matrix input ended early: expected n*n entries");
    try {
      m.entries()[i] = Int(tok);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad integer token: " + tok);
    }
  }
  std::string trailing;
  if (is >> trailing) throw parse_error("trailing tokens after n*n entries");
  return m;
}

TorusPoint parse_translation(const std::string& text, int n) {
  std::vector<Rat> coords;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    try {
      Rat r(token);
      r.canonicalize();
      coords.push_back(r);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad rational component: " + token);
    }
  }
  if (static_cast<int>(coords.size()) != n)
    throw parse_error("translation needs exactly n components");
  return TorusPoint::canonical(std::move(coords));
}

}  // namespace toralsym
