#include "toralsym/reversibility.hpp"

#include <algorithm>
#include <functional>

#include "toralsym/invariants.hpp"
#include "toralsym/polyring.hpp"

namespace toralsym {

namespace {

int factor_multiplicity(const Factorization& fac, const IntPolynomial& f) {
  for (const auto& [g, m] : fac.factors)
    if (g == f) return m;
  return 0;
}

}  // namespace

NecessaryConditions necessary_conditions(const IntMatrix& m) {
  NecessaryConditions out;
  int n = m.dim();
  IntPolynomial p = charpoly(m);
  Int d = det(m);
  out.det_ok = (d == 1 || d == -1);
  out.self_reciprocal = p.coeff(0) != 0 && is_self_reciprocal(p);
  if (!out.det_ok) {
    out.parity_obstruction = "determinant is not +-1";
    return out;
  }
  Factorization fac = factor_over_Z(p);
  bool irreducible =
      fac.factors.size() == 1 && fac.factors[0].second == 1 && fac.factors[0].first.degree() == n;
  if (irreducible && n > 1 && n % 2 == 1) {
    out.parity_obstruction = "odd dimension with irreducible characteristic polynomial";
    return out;
  }
  if (irreducible && d == -1) {
    out.parity_obstruction = "determinant -1 with irreducible characteristic polynomial";
    return out;
  }
  if (!irreducible) {
    // factors must be self-paired or matched with their reciprocal partner
    for (const auto& [f, mult] : fac.factors) {
      if (f.degree() < 1) continue;
      if (f.coeff(0) != 1 && f.coeff(0) != -1) {
        out.parity_obstruction = "irreducible factor with non-unit constant term: " + f.to_string();
        return out;
      }
      IntPolynomial partner = reciprocal_partner(f);
      if (partner == f) continue;
      if (factor_multiplicity(fac, partner) != mult) {
        if (f.degree() % 2 == 1 && f.degree() >= 3)
          out.parity_obstruction = "isolated irreducible factor of odd degree: " + f.to_string();
        else if (f.degree() % 2 == 0 && f.coeff(0) == -1)
          out.parity_obstruction =
              "isolated irreducible factor of even degree with constant term -1: " + f.to_string();
        else
          out.parity_obstruction = "spectrum not closed under inversion at factor " + f.to_string();
        return out;
      }
    }
    // even multiplicity of eigenvalue -1 (including zero) forces det = 1
    int mult_minus_one = factor_multiplicity(fac, IntPolynomial{1, 1});
    if (d == -1 && mult_minus_one % 2 == 0) {
      out.parity_obstruction = "determinant -1 with even multiplicity of eigenvalue -1";
      return out;
    }
  }
  return out;
}

IntMatrix symplectic_form(int two_n) {
  if (two_n % 2 != 0) throw dimension_error("symplectic_form: even dimension required");
  int n = two_n / 2;
  IntMatrix j(two_n, two_n);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = 1;
    j.at(n + i, i) = -1;
  }
  return j;
}

StructuralFlags structural_shortcuts(const IntMatrix& m) {
  StructuralFlags f;
  int n = m.dim();
  IntMatrix mt = m.transpose();
  f.is_integer_orthogonal = (m * mt).is_identity();
  if (n % 2 == 0) {
    IntMatrix j = symplectic_form(n);
    f.is_symplectic = mt * j * m == j;
    f.is_symmetric_symplectic = f.is_symplectic && mt == m;
    f.is_skew_symplectic = f.is_symplectic && mt == -m;
  }
  return f;
}

std::pair<bool, std::optional<RatMatrix>> q_reversibility(const IntMatrix& m) {
  if (!is_unimodular(m)) throw unimodularity_error("q_reversibility: unimodular input required");
  InvariantFactors inv = polynomial_invariants(m);
  for (const IntPolynomial& q : inv.q)
    if (q.coeff(0) == 0 || !is_self_reciprocal(q)) return {false, std::nullopt};
  FrobeniusForm fro = frobenius_form(m);
  if (fro.invariant_factors != inv.q)
    throw std::logic_error("q_reversibility: invariant-factor routes disagree");
  int n = m.dim();
  IntMatrix r(n, n);
  int off = 0;
  for (const IntPolynomial& q : inv.q) {
    int d = q.degree();
    for (int i = 0; i < d; ++i) r.at(off + i, off + d - 1 - i) = 1;
    off += d;
  }
  RatMatrix s = fro.transform;
  RatMatrix g = s * RatMatrix(r) * s.inverse();
  if (!(g * g).is_identity()) throw std::logic_error("q_reversibility: reversor is not an involution");
  RatMatrix mq(m);
  if (!(g * mq == RatMatrix(inverse_unimodular(m)) * g))
    throw std::logic_error("q_reversibility: reversor fails to conjugate M to its inverse");
  return {true, g};
}

std::vector<IntMatrix> reversor_module(const IntMatrix& m, bool projective) {
  int n = m.dim();
  IntMatrix target = inverse_unimodular(m);
  if (projective) target = -target;
  // kernel of G |-> G M - target G
  IntMatrix k(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int row = i * n + j;
      for (int a = 0; a < n; ++a) {
        k.at(row, i * n + a) += m.at(a, j);       // (G M)[i][j] term G[i][a] M[a][j]
        k.at(row, a * n + j) -= target.at(i, a);  // (target G)[i][j] term
      }
    }
  std::vector<IntMatrix> basis;
  for (const auto& v : integer_kernel(k)) {
    IntMatrix g(n, n);
    g.entries() = v;
    basis.push_back(g);
  }
  return basis;
}

namespace {

// Graded enumeration of coefficient vectors: L1 norm ascending, within a
// norm class lexicographic with per-coordinate value order 0, 1, -1, 2, -2,
// ...; vectors whose first nonzero coefficient is negative are skipped when
// halve_signs is set (G and -G carry the same witness information).
// Callback returns true to stop. Returns false if the budget ran out.
bool graded_enumerate(int dim, int radius, long budget, bool halve_signs,
                      const std::function<bool(const std::vector<Int>&)>& visit) {
  if (dim == 0) return true;
  std::vector<Int> c(dim);
  long used = 0;
  std::function<int(int, int, bool)> rec = [&](int pos, int remaining, bool leading_done) -> int {
    if (used >= budget) return 2;
    if (pos == dim) {
      if (remaining != 0) return 0;
      ++used;
      return visit(c) ? 1 : 0;
    }
    int room = (dim - pos - 1) * radius;
    for (int mag = 0; mag <= std::min(radius, remaining); ++mag) {
      if (remaining - mag > room) continue;
      for (int sign = 0; sign < (mag == 0 ? 1 : 2); ++sign) {
        if (sign == 1 && mag > 0 && !leading_done && halve_signs) continue;
        c[pos] = sign == 0 ? mag : -mag;
        int res = rec(pos + 1, remaining - mag, leading_done || mag > 0);
        if (res) return res;
      }
    }
    c[pos] = 0;
    return 0;
  };
  for (int norm = 1; norm <= dim * radius; ++norm) {
    int res = rec(0, norm, false);
    if (res == 1) return true;
    if (res == 2) return false;
  }
  return true;
}

IntMatrix combine_basis(const std::vector<IntMatrix>& basis, const std::vector<Int>& c) {
  IntMatrix g(basis[0].rows(), basis[0].cols());
  for (size_t i = 0; i < basis.size(); ++i) {
    if (c[i] == 0) continue;
    IntMatrix t = basis[i];
    t *= c[i];
    g += t;
  }
  return g;
}

bool is_reversor_for(const IntMatrix& g, const IntMatrix& m, const IntMatrix& target) {
  return is_unimodular(g) && g * m == target * g;
}

WitnessSearch conjugacy_witness_search(const IntMatrix& m, int radius, bool projective,
                                       long budget) {
  WitnessSearch out;
  out.radius = radius;
  int n = m.dim();
  IntMatrix target = inverse_unimodular(m);
  if (projective) target = -target;

  // fast path: the symplectic form for (skew-)symmetric symplectic matrices
  StructuralFlags flags = structural_shortcuts(m);
  if ((projective ? flags.is_skew_symplectic : flags.is_symmetric_symplectic)) {
    IntMatrix j = symplectic_form(n);
    if (is_reversor_for(j, m, target)) {
      out.verdict = SearchVerdict::found;
      out.witness = j;
      out.path = projective ? "skew-symplectic J" : "symmetric-symplectic J";
      return out;
    }
  }
  // fast path: the reversal involution (covers companion matrices of
  // self-reciprocal polynomials and block-diagonal assemblies thereof)
  IntMatrix r = reversal_involution(n);
  if (is_reversor_for(r, m, target)) {
    out.verdict = SearchVerdict::found;
    out.witness = r;
    out.path = "reversal involution R";
    return out;
  }
  // fast path: finite-order twists t * R over the pinned torsion
  if (is_simple(m)) {
    TorsionSearchResult ts = torsion_search(m, 0);  // pinned enumeration only
    if (ts.pinned) {
      for (const IntMatrix& t : ts.elements) {
        IntMatrix cand = t * r;
        if (is_reversor_for(cand, m, target)) {
          out.verdict = SearchVerdict::found;
          out.witness = cand;
          out.path = "torsion twist of R";
          return out;
        }
      }
    }
  }
  // graded box over the reversor module
  std::vector<IntMatrix> basis = reversor_module(m, projective);
  out.module_rank = static_cast<int>(basis.size());
  if (basis.empty()) return out;
  std::optional<IntMatrix> hit;
  graded_enumerate(out.module_rank, radius, budget, true, [&](const std::vector<Int>& c) {
    IntMatrix g = combine_basis(basis, c);
    if (is_unimodular(g)) {
      hit = g;
      return true;
    }
    return false;
  });
  if (hit) {
    if (!is_reversor_for(*hit, m, target))
      throw std::logic_error("reversor search: module element fails the conjugation identity");
    out.verdict = SearchVerdict::found;
    out.witness = *hit;
    out.path = "graded box enumeration";
  }
  return out;
}

}  // namespace

WitnessSearch z_reversor_search(const IntMatrix& m, int radius) {
  auto [q_rev, q_wit] = q_reversibility(m);
  if (!q_rev) {
    WitnessSearch out;
    out.radius = radius;
    out.verdict = SearchVerdict::excluded;
    out.path = "not reversible in GL(n,Q)";
    return out;
  }
  return conjugacy_witness_search(m, radius, false, 300000);
}

WitnessSearch pgl_reversor_search(const IntMatrix& m, int radius) {
  if (!is_unimodular(m)) throw unimodularity_error("pgl_reversor_search: unimodular input required");
  return conjugacy_witness_search(m, radius, true, 500000);
}

namespace {

// canonical order for weak witnesses: height, then sparsity, then distance
// from the identity, then entrywise with 0 < 1 < -1 < 2 < -2 < ...
bool weak_less(const IntMatrix& a, const IntMatrix& b) {
  Int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  int sa = a.support(), sb = b.support();
  if (sa != sb) return sa < sb;
  IntMatrix ia = a - IntMatrix::identity(a.dim());
  IntMatrix ib = b - IntMatrix::identity(b.dim());
  Int da = ia.height(), db = ib.height();
  if (da != db) return da < db;
  for (size_t i = 0; i < a.entries().size(); ++i) {
    const Int& x = a.entries()[i];
    const Int& y = b.entries()[i];
    if (x == y) continue;
    Int ax = abs(x), ay = abs(y);
    if (ax != ay) return ax < ay;
    return sgn(x) > sgn(y);
  }
  return false;
}

}  // namespace

std::optional<IntMatrix> weak_reversibility_search(const IntMatrix& m, int radius) {
  int n = m.dim();
  // kernel of G |-> G - M G M
  IntMatrix k(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int row = i * n + j;
      k.at(row, row) += 1;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) k.at(row, a * n + b) -= m.at(i, a) * m.at(b, j);
    }
  std::vector<IntMatrix> basis;
  for (const auto& v : integer_kernel(k)) {
    IntMatrix g(n, n);
    g.entries() = v;
    basis.push_back(g);
  }
  if (basis.empty()) return std::nullopt;
  std::optional<IntMatrix> best;
  graded_enumerate(static_cast<int>(basis.size()), radius, 300000, false,
                   [&](const std::vector<Int>& c) {
                     IntMatrix g = combine_basis(basis, c);
                     if (det(g) == 0) return false;
                     if (!best || weak_less(g, *best)) best = g;
                     return false;  // keep scanning: the minimum is wanted
                   });
  return best;
}

ReversorOrderAnalysis reversor_order_analysis(const IntMatrix& m, const IntMatrix& g) {
  ReversorOrderAnalysis out;
  int n = m.dim();
  if (g.dim() != n) throw dimension_error("reversor_order_analysis: dimension mismatch");
  IntMatrix minv = inverse_unimodular(m);
  out.witness_valid = is_unimodular(g) && g * m == minv * g;
  if (!out.witness_valid) {
    out.reason = "G is not a unimodular reversing symmetry of M";
    return out;
  }
  IntMatrix g2 = g * g;
  out.g_fourth_is_identity = (g2 * g2).is_identity();

  CommutantModule com = commutant_basis(m);
  out.g_squared_in_commutant = com.coordinates(g2);

  // G^2 = sign * M^l detection
  std::optional<long> m_order = matrix_order(m);
  long cap = m_order ? *m_order : 64;
  IntMatrix power = IntMatrix::identity(n);
  for (long l = 0; l < cap; ++l) {
    if (g2 == power) {
      out.g_squared_signed_power = {1, l};
      break;
    }
    if (g2 == -power) {
      out.g_squared_signed_power = {-1, l};
      break;
    }
    power = power * m;
  }

  // semi-direct structure needs only an involutory reversor (Fact on
  // reversing symmetry groups) and M^2 != 1
  bool m2_trivial = (m * m).is_identity();
  if (g2.is_identity() && !m2_trivial) out.semidirect_confirmed = true;

  bool simple_input = is_simple(m);
  int rank = 0;
  if (simple_input) {
    for (const auto& [f, mult] : factor_over_Z(charpoly(m)).factors) {
      (void)mult;
      if (f.degree() < 2) continue;
      RootSignature sig = real_root_count(f);
      rank += sig.n1 + sig.n2 - 1;
    }
  }
  TorsionSearchResult ts = simple_input ? torsion_search(m, 0) : TorsionSearchResult{};
  out.applicable = simple_input && rank == 1 && ts.complete && !m_order;
  if (!out.applicable) {
    out.reason = !simple_input         ? "charpoly not square-free"
                 : rank != 1           ? "centralizer rank is not 1"
                 : !ts.complete        ? "torsion search incomplete"
                 : m_order.has_value() ? "M has finite order"
                                       : "";
    if (out.reason.empty()) out.reason = "inapplicable";
    return out;
  }
  out.reason = "S(M)/<M> finite: rank 1, torsion complete, M of infinite order";

  // every reversor t M^k G squares to t*(G t G^-1)*G^2 independently of k
  IntMatrix ginv = inverse_unimodular(g);
  std::optional<long> best;
  for (const IntMatrix& t : ts.elements) {
    IntMatrix sq = t * (g * t * ginv) * g2;
    if (sq.is_identity()) {
      out.involutory_in_family = true;
      IntMatrix wit = t * g;
      if (!((wit * wit).is_identity()))
        throw std::logic_error("reversor_order_analysis: involutory witness check failed");
      out.involutory_witness = wit;
      if (!best || 2 < *best) best = 2;
      continue;
    }
    auto ord = matrix_order(sq);
    if (ord && (!best || 2 * *ord < *best)) best = 2 * *ord;
  }
  out.minimal_reversor_order = best;
  if (out.involutory_in_family && !m2_trivial) out.semidirect_confirmed = true;
  return out;
}

ReversibilityReport analyze_reversibility(const IntMatrix& m, int z_radius, bool projective,
                                          int weak_radius) {
  ReversibilityReport rep;
  rep.necessary = necessary_conditions(m);
  rep.structural = structural_shortcuts(m);
  auto [q_rev, q_wit] = q_reversibility(m);
  rep.q_reversible = q_rev;
  rep.q_reversor = q_wit;
  if ((rep.structural.is_symplectic || rep.structural.is_integer_orthogonal) && !q_rev)
    throw std::logic_error("analyze_reversibility: structural shortcut contradicts Q-verdict");
  if (!q_rev) {
    rep.z_search.radius = z_radius;
    rep.z_search.verdict = SearchVerdict::excluded;
    rep.z_search.path = "not reversible in GL(n,Q)";
  } else {
    rep.z_search = conjugacy_witness_search(m, z_radius, false, 300000);
  }
  if (projective) rep.pgl_search = pgl_reversor_search(m, z_radius);
  rep.weak_witness = weak_reversibility_search(m, weak_radius);
  if (rep.weak_witness) rep.weak_det = det(*rep.weak_witness);
  if (rep.z_search.witness) rep.reversor_orders = reversor_order_analysis(m, *rep.z_search.witness);
  return rep;
}

}  // namespace toralsym
