#include "toralsym/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qpoly.hpp"
#include "toralsym/invariants.hpp"
#include "toralsym/polyring.hpp"

namespace toralsym {

namespace {

std::vector<Int> vec(const IntMatrix& g) { return g.entries(); }

IntMatrix unvec(const std::vector<Int>& v, int n) {
  IntMatrix g(n, n);
  g.entries() = v;
  return g;
}

}  // namespace

std::optional<std::vector<Int>> CommutantModule::coordinates(const IntMatrix& g) const {
  if (g.rows() != n || g.cols() != n) throw dimension_error("commutant: dimension mismatch");
  return lattice_solve(basis_hnf, vec(g));
}

bool CommutantModule::contains_identity() const { return contains(IntMatrix::identity(n)); }

bool CommutantModule::ring_closed() const {
  for (const IntMatrix& a : basis)
    for (const IntMatrix& b : basis)
      if (!contains(a * b)) return false;
  return true;
}

IntMatrix CommutantModule::combine(const std::vector<Int>& coeff) const {
  IntMatrix g(n, n);
  for (size_t i = 0; i < coeff.size() && i < basis.size(); ++i) {
    if (coeff[i] == 0) continue;
    IntMatrix t = basis[i];
    t *= coeff[i];
    g += t;
  }
  return g;
}

CommutantModule commutant_basis(const IntMatrix& m) {
  int n = m.dim();
  // kernel of G |-> MG - GM on vectorized matrices
  IntMatrix k(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int row = i * n + j;
      for (int a = 0; a < n; ++a) {
        k.at(row, a * n + j) += m.at(i, a);
        k.at(row, i * n + a) -= m.at(a, j);
      }
    }
  CommutantModule com;
  com.n = n;
  auto kernel = integer_kernel(k);
  com.basis_hnf = IntMatrix(static_cast<int>(kernel.size()), n * n);
  for (size_t r = 0; r < kernel.size(); ++r) {
    for (int c = 0; c < n * n; ++c) com.basis_hnf.at(static_cast<int>(r), c) = kernel[r][c];
    com.basis.push_back(unvec(kernel[r], n));
  }
  return com;
}

std::optional<long> matrix_order(const IntMatrix& g) {
  if (!is_unimodular(g)) throw unimodularity_error("matrix_order: unimodular input required");
  auto [cyc, ord] = cyclotomic_profile(charpoly(g));
  if (!cyc) return std::nullopt;
  if (mat_pow(g, *ord).is_identity()) return ord;
  return std::nullopt;  // cyclotomic spectrum but not semi-simple
}

bool verify_symmetry(const IntMatrix& m, const IntMatrix& g) {
  if (m.dim() != g.dim()) throw dimension_error("verify_symmetry: dimension mismatch");
  return is_unimodular(g) && m * g == g * m;
}

std::optional<long> ksym_index(const IntMatrix& m, const IntMatrix& g, long k_max) {
  IntMatrix power = m;
  for (long k = 1; k <= k_max; ++k) {
    if (power * g == g * power) return k;
    power = power * m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// finite abelian group structure from an explicit element set
// ---------------------------------------------------------------------------

namespace {

struct MatrixSet {
  std::set<std::vector<Int>> keys;
  std::vector<IntMatrix> items;

  bool insert(const IntMatrix& g) {
    auto [it, fresh] = keys.insert(vec(g));
    if (fresh) items.push_back(g);
    return fresh;
  }
  bool count(const IntMatrix& g) const { return keys.count(vec(g)) > 0; }
  size_t size() const { return items.size(); }
};

// multiplicative closure; returns false if the cap is exceeded
bool close_under_products(MatrixSet& s, size_t cap) {
  size_t fringe_start = 0;
  while (fringe_start < s.items.size()) {
    size_t end = s.items.size();
    if (end > cap) return false;
    for (size_t i = fringe_start; i < end; ++i)
      for (size_t j = 0; j < end; ++j) {
        IntMatrix p = s.items[i] * s.items[j];
        s.insert(p);
        if (s.items.size() > cap) return false;
      }
    fringe_start = end;
  }
  return true;
}

long element_order(const IntMatrix& g, long cap = 10000) {
  IntMatrix p = g;
  for (long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * g;
  }
  throw std::logic_error("element_order: order exceeds cap");
}

std::vector<long> primes_of(long n) {
  std::vector<long> ps;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// invariant factors d_1 | d_2 | ... of a finite abelian group given element
// orders, via the order-counting partition per prime
std::vector<long> abelian_invariant_factors(const std::vector<long>& orders) {
  long n = static_cast<long>(orders.size());
  if (n <= 1) return {};
  std::vector<std::vector<long>> lambdas;  // partition per prime, descending
  std::vector<long> primes = primes_of(n);
  for (long p : primes) {
    std::vector<long> mu;  // mu_j = log_p #{g : ord(g) | p^j}
    mu.push_back(0);
    for (long j = 1;; ++j) {
      long pj = 1;
      for (long t = 0; t < j; ++t) pj *= p;
      long cnt = 0;
      for (long o : orders) {
        // ord | p^j iff ord is a power of p dividing p^j
        if (pj % o == 0) ++cnt;
      }
      long logc = 0, c = cnt;
      while (c > 1) {
        if (c % p != 0) throw std::logic_error("abelian_invariant_factors: non-p-power count");
        c /= p;
        ++logc;
      }
      mu.push_back(logc);
      if (j > 1 && mu[j] == mu[j - 1]) break;
    }
    // mu_j - mu_{j-1} is the conjugate partition; conjugating once more
    // yields the exponent partition lambda_t = #{j : diff_j >= t}
    std::vector<long> lambda;
    for (long t = 1;; ++t) {
      long cnt = 0;
      for (size_t j = 1; j < mu.size(); ++j)
        if (mu[j] - mu[j - 1] >= t) ++cnt;
      if (cnt == 0) break;
      lambda.push_back(cnt);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    if (!lambda.empty()) {
      std::vector<long> powers;
      for (long e : lambda) {
        long pe = 1;
        for (long t = 0; t < e; ++t) pe *= p;
        powers.push_back(pe);
      }
      lambdas.push_back(powers);
    }
  }
  size_t r = 0;
  for (const auto& l : lambdas) r = std::max(r, l.size());
  std::vector<long> d(r, 1);
  for (const auto& l : lambdas)
    for (size_t k = 0; k < l.size(); ++k) d[k] *= l[k];  // largest-with-largest
  std::reverse(d.begin(), d.end());                      // ascending divisibility
  return d;
}

std::vector<IntMatrix> greedy_generators(const MatrixSet& group) {
  std::vector<std::pair<long, const IntMatrix*>> by_order;
  for (const IntMatrix& g : group.items)
    if (!g.is_identity()) by_order.emplace_back(element_order(g), &g);
  std::sort(by_order.begin(), by_order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return vec(*a.second) < vec(*b.second);
  });
  std::vector<IntMatrix> gens;
  MatrixSet generated;
  generated.insert(IntMatrix::identity(group.items.empty() ? 0 : group.items[0].dim()));
  for (const auto& [ord, g] : by_order) {
    if (generated.size() == group.size()) break;
    if (generated.count(*g)) continue;
    gens.push_back(*g);
    MatrixSet next;
    next.insert(IntMatrix::identity(g->dim()));
    for (const IntMatrix& h : gens) next.insert(h);
    for (const IntMatrix& h : generated.items) next.insert(h);
    close_under_products(next, group.size() + 1);
    generated = std::move(next);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// exact torsion via idempotent lifts, for simple M whose factors are all
// real-rooted or cyclotomic (then the per-field torsion is known)
// ---------------------------------------------------------------------------

using qpoly::QPoly;

struct PinnedData {
  bool ok = false;
  MatrixSet torsion;
};

PinnedData pinned_torsion(const IntMatrix& m) {
  PinnedData out;
  int n = m.dim();
  IntPolynomial p = charpoly(m);
  if (!poly_is_squarefree(p)) return out;
  Factorization fac = factor_over_Z(p);
  // per-factor lifts of the unit-circle torsion: {+-1} for a factor with a
  // real root, {+- x^j} for the cyclotomic factor Phi_k
  std::vector<std::vector<QPoly>> lifts;
  size_t total = 1;
  for (const auto& [f, mult] : fac.factors) {
    (void)mult;
    std::vector<QPoly> l;
    if (f.degree() == 1 || real_root_count(f).n1 >= 1) {
      l.push_back(QPoly{Rat(1)});
      l.push_back(QPoly{Rat(-1)});
    } else {
      auto [cyc, ord] = cyclotomic_profile(f);
      if (!cyc) return out;  // totally complex non-cyclotomic: not pinned
      for (long j = 0; j < *ord; ++j) {
        QPoly xj(static_cast<size_t>(j) + 1);
        xj[j] = 1;
        QPoly red = qpoly::divmod(xj, qpoly::from_int(f)).second;
        l.push_back(red);
        l.push_back(qpoly::scale(red, Rat(-1)));
      }
    }
    total *= l.size();
    if (total > 200000) return out;
    lifts.push_back(std::move(l));
  }
  // idempotents e_i = s_i * (P / P_i) mod P with s_i * (P/P_i) = 1 mod P_i
  QPoly pq = qpoly::from_int(p);
  std::vector<QPoly> idem;
  for (const auto& [f, mult] : fac.factors) {
    (void)mult;
    QPoly u = qpoly::from_int(poly_exact_div(p, f));
    QPoly g, s, t;
    qpoly::xgcd(u, qpoly::from_int(f), g, s, t);
    if (qpoly::deg(g) != 0) throw std::logic_error("pinned_torsion: factors not coprime");
    idem.push_back(qpoly::divmod(qpoly::mul(s, u), pq).second);
  }
  // powers of M for evaluation
  std::vector<IntMatrix> mpow(n, IntMatrix::identity(n));
  for (int k = 1; k < n; ++k) mpow[k] = mpow[k - 1] * m;

  std::vector<size_t> pick(lifts.size(), 0);
  for (;;) {
    QPoly cand;
    for (size_t i = 0; i < lifts.size(); ++i)
      cand = qpoly::add(cand, qpoly::divmod(qpoly::mul(idem[i], lifts[i][pick[i]]), pq).second);
    // evaluate at M and keep integral results
    RatMatrix g(n, n);
    for (size_t j = 0; j < cand.size(); ++j) {
      if (cand[j] == 0) continue;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g.at(r, c) += cand[j] * Rat(mpow[j].at(r, c));
    }
    if (g.is_integral()) out.torsion.insert(g.to_int());
    size_t i = 0;
    while (i < pick.size() && pick[i] + 1 == lifts[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  out.ok = true;
  return out;
}

}  // namespace

TorsionSearchResult torsion_search(const IntMatrix& m, int radius) {
  TorsionSearchResult out;
  out.radius = radius;
  int n = m.dim();
  CommutantModule com = commutant_basis(m);
  // for cyclic M the commutant is commutative and the finite-order elements
  // form a finite subgroup; otherwise only a raw element list is reported
  bool abelian_context = is_cyclic(m);

  PinnedData pinned = pinned_torsion(m);
  MatrixSet group;
  group.insert(IntMatrix::identity(n));
  group.insert(-IntMatrix::identity(n));
  if (pinned.ok) {
    for (const IntMatrix& g : pinned.torsion.items) group.insert(g);
    out.pinned = true;
    out.complete = true;
  }

  // bounded box scan over the commutant lattice: collects torsion elements
  // in the non-pinned case, and decides the in-box exclusions (third-order
  // elements, square roots of M) in all cases
  int r = com.rank();
  double log_candidates = r * std::log2(2.0 * radius + 1.0);
  bool box_feasible = log_candidates < 21.0;  // ~2e6 candidates
  out.box_exhausted = box_feasible;
  if (box_feasible) {
    std::vector<long> c(r, -radius);
    for (;;) {
      bool all_zero = true;
      for (long v : c)
        if (v != 0) all_zero = false;
      if (!all_zero) {
        std::vector<Int> coeff(c.begin(), c.end());
        IntMatrix g = com.combine(coeff);
        IntMatrix g2 = g * g;
        if (g2 == m) out.sqrt_of_m_found = true;
        if (is_unimodular(g)) {
          auto ord = matrix_order(g);
          if (ord) {
            if (*ord == 3) out.order3_found = true;
            if (pinned.ok) {
              if (!pinned.torsion.count(g))
                throw std::logic_error("torsion_search: box element outside pinned torsion");
            } else {
              group.insert(g);
            }
          }
        }
      }
      int i = 0;
      while (i < r && c[i] == radius) c[i++] = -radius;
      if (i == r) break;
      ++c[i];
    }
  }

  if (abelian_context) {
    if (!close_under_products(group, 20000))
      throw std::logic_error("torsion_search: closure cap exceeded");
    if (!out.order3_found) {
      for (const IntMatrix& g : group.items)
        if (element_order(g) == 3) out.order3_found = true;
    }
    out.order = static_cast<long>(group.size());
    std::vector<long> orders;
    for (const IntMatrix& g : group.items) orders.push_back(element_order(g));
    out.invariant_factors = abelian_invariant_factors(orders);
    out.generators = greedy_generators(group);
  } else {
    // non-cyclic input: report the finite-order elements found, no group
    // structure claim
    out.complete = false;
    out.order = static_cast<long>(group.size());
    out.generators = group.items;
  }
  std::sort(group.items.begin(), group.items.end(),
            [](const IntMatrix& a, const IntMatrix& b) { return vec(a) < vec(b); });
  out.elements = group.items;
  return out;
}

GroupStructure centralizer_structure(const IntMatrix& m, int torsion_radius) {
  if (!is_unimodular(m)) throw unimodularity_error("centralizer_structure: unimodular input required");
  GroupStructure gs;
  CommutantModule com = commutant_basis(m);
  gs.commutant_rank = com.rank();
  if (!is_simple(m)) return gs;  // structure undetermined, rank only
  gs.structure_known = true;
  Factorization fac = factor_over_Z(charpoly(m));
  int rank = 0;
  for (const auto& [f, mult] : fac.factors) {
    (void)mult;
    if (f.degree() == 1) continue;  // n1=1, n2=0 contributes 0
    RootSignature sig = real_root_count(f);
    rank += sig.n1 + sig.n2 - 1;
  }
  gs.rank = rank;
  TorsionSearchResult ts = torsion_search(m, torsion_radius);
  gs.torsion = ts.invariant_factors;
  gs.torsion_complete = ts.complete;
  return gs;
}

GeneratorSetReport verify_generator_set(const IntMatrix& m, const std::vector<IntMatrix>& gens) {
  GeneratorSetReport rep;
  for (const IntMatrix& g : gens) {
    if (!is_unimodular(g))
      throw std::invalid_argument("verify_generator_set: claimed generator is not unimodular");
    if (!(m * g == g * m))
      throw std::invalid_argument("verify_generator_set: claimed generator does not commute with M");
  }
  rep.pairwise_commute = true;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) rep.pairwise_commute = false;

  std::vector<const IntMatrix*> infinite;
  long torsion_count = 0;
  std::string torsion_str;
  for (const IntMatrix& g : gens) {
    auto ord = matrix_order(g);
    rep.orders.push_back(ord);
    if (!ord)
      infinite.push_back(&g);
    else if (*ord > 1) {
      torsion_str += (torsion_count ? " x C" : "C") + std::to_string(*ord);
      ++torsion_count;
    }
  }

  // bounded independence: no product of infinite-order generators with
  // exponents in [-6, 6] may have finite order
  const int bound = 6;
  rep.independent = true;
  size_t k = infinite.size();
  double log_combos = static_cast<double>(k) * std::log2(2.0 * bound + 1.0);
  rep.independence_checked = k == 0 || log_combos < 18.0;  // ~260k products
  if (k > 0 && rep.independence_checked) {
    std::vector<std::vector<IntMatrix>> powers(k);
    for (size_t i = 0; i < k; ++i) {
      powers[i].resize(2 * bound + 1, IntMatrix::identity(m.dim()));
      for (int e = -bound; e <= bound; ++e) powers[i][e + bound] = mat_pow(*infinite[i], e);
    }
    std::vector<int> e(k, -bound);
    for (;;) {
      bool nonzero = false;
      for (int v : e)
        if (v != 0) nonzero = true;
      if (nonzero) {
        IntMatrix prod = IntMatrix::identity(m.dim());
        for (size_t i = 0; i < k; ++i) prod = prod * powers[i][e[i] + bound];
        if (matrix_order(prod)) {
          rep.independent = false;
          break;
        }
      }
      size_t i = 0;
      while (i < k && e[i] == bound) e[i++] = -bound;
      if (i == k) break;
      ++e[i];
    }
  }

  rep.consistent = rep.pairwise_commute && (infinite.empty() || rep.independent);
  if (torsion_count == 0 && infinite.empty())
    rep.structure = "trivial";
  else {
    rep.structure = torsion_str;
    if (!infinite.empty()) {
      if (!rep.structure.empty()) rep.structure += " x ";
      rep.structure += infinite.size() == 1 ? "Z" : "Z^" + std::to_string(infinite.size());
    }
  }
  return rep;
}

std::vector<long> admissible_finite_orders(int n) {
  auto cost = [](long m) {
    long c = 0;
    for (long p = 2; p <= m; ++p) {
      if (m % p != 0) continue;
      long pe = 1;
      while (m % p == 0) {
        m /= p;
        pe *= p;
      }
      c += pe - pe / p;  // phi(p^e)
    }
    return c;
  };
  std::vector<long> out;
  for (long m = 1; m <= 1000; ++m) {
    if (cost(m) <= n)
      out.push_back(m);
    else if (m % 4 == 2 && cost(m / 2) <= n)
      out.push_back(m);
  }
  return out;
}

}  // namespace toralsym
