#include "toralsym/invariants.hpp"

#include <algorithm>

#include "qpoly.hpp"
#include "ratlin.hpp"

namespace toralsym {

namespace {

using PolyRow = std::vector<IntPolynomial>;
using PolyGrid = std::vector<PolyRow>;

// Fraction-free Bareiss determinant over Z[x]; divisions are exact by the
// Sylvester identity.
IntPolynomial det_poly(PolyGrid a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return IntPolynomial{1};
  int sign = 1;
  IntPolynomial prev{1};
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return IntPolynomial();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = poly_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = IntPolynomial();
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// all k-subsets of {0..n-1} in lexicographic order
struct SubsetIter {
  int n, k;
  std::vector<int> idx;
  bool done = false;
  SubsetIter(int n_, int k_) : n(n_), k(k_), idx(k_) {
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) done = true;
  }
  void next() {
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) {
      done = true;
      return;
    }
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
};

PolyGrid char_matrix(const IntMatrix& m) {
  int n = m.dim();
  PolyGrid x(n, PolyRow(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        x[i][j] = IntPolynomial::from_coeffs({-m.at(i, j), Int(1)});
      else
        x[i][j] = IntPolynomial::constant(-m.at(i, j));
    }
  return x;
}

}  // namespace

InvariantFactors polynomial_invariants(const IntMatrix& m) {
  int n = m.dim();
  PolyGrid xm = char_matrix(m);
  // p_k = gcd of all k x k minors of (x*1 - M); accumulate with an early
  // exit once the running gcd reaches 1
  std::vector<IntPolynomial> p(n + 1);
  p[0] = IntPolynomial{1};
  for (int k = 1; k <= n; ++k) {
    IntPolynomial g;
    for (SubsetIter rows(n, k); !rows.done; rows.next()) {
      for (SubsetIter cols(n, k); !cols.done; cols.next()) {
        PolyGrid sub(k, PolyRow(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = xm[rows.idx[i]][cols.idx[j]];
        g = poly_gcd(g, det_poly(std::move(sub)));
        if (g.degree() == 0 && !g.is_zero()) break;
      }
      if (g.degree() == 0 && !g.is_zero()) break;
    }
    p[k] = g.primitive();
  }
  InvariantFactors out;
  int ell = 0;
  for (int k = 0; k <= n; ++k)
    if (p[k].degree() == 0) ell = k;
  out.ell = ell;
  for (int i = ell + 1; i <= n; ++i) out.q.push_back(poly_exact_div(p[i], p[i - 1]));
  // sanity: divisibility chain and product = charpoly
  IntPolynomial prod{1};
  for (size_t i = 0; i < out.q.size(); ++i) {
    prod = prod * out.q[i];
    if (i + 1 < out.q.size() && !poly_divides(out.q[i], out.q[i + 1]))
      throw std::logic_error("polynomial_invariants: divisibility chain broken");
  }
  if (prod != charpoly(m)) throw std::logic_error("polynomial_invariants: product != charpoly");
  return out;
}

IntPolynomial minimal_polynomial(const IntMatrix& m) {
  int n = m.dim();
  RatLinSolver solver(n * n);
  IntMatrix power = IntMatrix::identity(n);
  for (int d = 0; d <= n; ++d) {
    std::vector<Rat> v(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < v.size(); ++i) v[i] = power.entries()[i];
    auto dep = solver.add_vector(v);
    if (dep) {
      // M^d = sum c_i M^i  ->  x^d - sum c_i x^i annihilates M
      std::vector<Int> c(d + 1);
      Int den = 1;
      for (const Rat& r : *dep) den = lcm(den, Int(r.get_den()));
      if (den != 1) throw std::logic_error("minimal_polynomial: non-integer coefficients");
      for (int i = 0; i < d; ++i) c[i] = -(*dep)[i].get_num();
      c[d] = 1;
      return IntPolynomial::from_coeffs(std::move(c));
    }
    power = power * m;
  }
  throw std::logic_error("minimal_polynomial: no annihilator up to degree n");
}

bool is_cyclic(const IntMatrix& m) { return minimal_polynomial(m).degree() == m.dim(); }

bool is_simple(const IntMatrix& m) { return poly_is_squarefree(charpoly(m)); }

bool is_semisimple(const IntMatrix& m) { return poly_is_squarefree(minimal_polynomial(m)); }

IntMatrix companion(const IntPolynomial& p, CompanionSide side) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument("companion: monic polynomial of degree >= 1 required");
  int n = p.degree();
  IntMatrix a(n, n);
  for (int i = 0; i + 1 < n; ++i) a.at(i, i + 1) = 1;
  for (int j = 0; j < n; ++j) a.at(n - 1, j) = -p.coeff(j);
  if (side == CompanionSide::right) {
    IntMatrix r = reversal_involution(n);
    return r * a * r;
  }
  return a;
}

IntMatrix reversal_involution(int n) {
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, n - 1 - i) = 1;
  return r;
}

IntMatrix FrobeniusForm::assemble() const {
  int n = 0;
  for (const IntMatrix& b : blocks) n += b.dim();
  IntMatrix d(n, n);
  int off = 0;
  for (const IntMatrix& b : blocks) {
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) d.at(off + i, off + j) = b.at(i, j);
    off += b.dim();
  }
  return d;
}

namespace {

using qpoly::QPoly;
using QGrid = std::vector<std::vector<QPoly>>;

// Smith reduction of A(x) over Q[x], tracking U^-1 so that the cokernel
// generators can be read off. Returns the diagonal (monic, divisibility
// chain) and Uinv.
void smith_qx(QGrid a, std::vector<QPoly>& diag, QGrid& uinv) {
  int n = static_cast<int>(a.size());
  uinv.assign(n, std::vector<QPoly>(n));
  for (int i = 0; i < n; ++i) uinv[i][i] = {Rat(1)};

  auto row_sub = [&](int dst, int src, const QPoly& f) {
    // row_dst -= f * row_src  on a;  col_src += f * col_dst  on uinv
    for (int j = 0; j < n; ++j) a[dst][j] = qpoly::sub(a[dst][j], qpoly::mul(f, a[src][j]));
    for (int i = 0; i < n; ++i) uinv[i][src] = qpoly::add(uinv[i][src], qpoly::mul(f, uinv[i][dst]));
  };
  auto col_sub = [&](int dst, int src, const QPoly& f) {
    for (int i = 0; i < n; ++i) a[i][dst] = qpoly::sub(a[i][dst], qpoly::mul(f, a[i][src]));
  };
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    for (int r = 0; r < n; ++r) std::swap(uinv[r][i], uinv[r][j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };
  auto row_scale = [&](int i, const Rat& s) {
    for (int j = 0; j < n; ++j) a[i][j] = qpoly::scale(a[i][j], s);
    for (int r = 0; r < n; ++r) uinv[r][i] = qpoly::scale(uinv[r][i], 1 / s);
  };

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // minimal-degree nonzero pivot in the remaining block
      int pi = -1, pj = -1, best = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          int d = qpoly::deg(a[i][j]);
          if (d < 0) continue;
          if (best < 0 || d < best) {
            best = d;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        pi = pj = t;  // block is zero; leave as is
        break;
      }
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      bool dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (qpoly::deg(a[i][t]) < 0) continue;
        auto [q, r] = qpoly::divmod(a[i][t], a[t][t]);
        row_sub(i, t, q);
        if (!a[i][t].empty()) dirty = true;
      }
      for (int j = t + 1; j < n; ++j) {
        if (qpoly::deg(a[t][j]) < 0) continue;
        auto [q, r] = qpoly::divmod(a[t][j], a[t][t]);
        col_sub(j, t, q);
        if (!a[t][j].empty()) dirty = true;
      }
      if (dirty) continue;
      // divisibility fix: entry not divisible by the pivot gets pulled in
      bool redo = false;
      for (int i = t + 1; i < n && !redo; ++i)
        for (int j = t + 1; j < n && !redo; ++j) {
          if (qpoly::deg(a[i][j]) < 0) continue;
          if (!qpoly::divmod(a[i][j], a[t][t]).second.empty()) {
            row_sub(t, i, {Rat(-1)});  // row_t += row_i
            redo = true;
          }
        }
      if (!redo) break;
    }
    if (qpoly::deg(a[t][t]) >= 0 && a[t][t].back() != 1) row_scale(t, 1 / a[t][t].back());
  }
  diag.clear();
  for (int t = 0; t < n; ++t) diag.push_back(a[t][t]);
}

// evaluate a polynomial column vector at M: sum_k w_k(M) e_k
std::vector<Rat> eval_poly_vector(const std::vector<QPoly>& w, const std::vector<IntMatrix>& mpow) {
  int n = mpow[0].dim();
  std::vector<Rat> v(n);
  for (int k = 0; k < n; ++k)
    for (size_t j = 0; j < w[k].size(); ++j) {
      if (w[k][j] == 0) continue;
      for (int i = 0; i < n; ++i) v[i] += w[k][j] * Rat(mpow[j].at(i, k));
    }
  return v;
}

}  // namespace

FrobeniusForm frobenius_form(const IntMatrix& m) {
  int n = m.dim();
  QGrid a(n, std::vector<QPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        a[i][j] = QPoly{Rat(-m.at(i, j)), Rat(1)};
      else if (m.at(i, j) != 0)
        a[i][j] = QPoly{Rat(-m.at(i, j))};
    }
  std::vector<QPoly> diag;
  QGrid uinv;
  smith_qx(std::move(a), diag, uinv);

  std::vector<IntMatrix> mpow(n + 1, IntMatrix::identity(n));
  for (int k = 1; k <= n; ++k) mpow[k] = mpow[k - 1] * m;
  // generators only matter modulo the Q[x]-module structure, so the
  // transform polynomials can be reduced mod charpoly before evaluation
  QPoly chi = qpoly::from_int(charpoly(m));

  FrobeniusForm f;
  std::vector<std::vector<Rat>> columns;
  for (int i = 0; i < n; ++i) {
    if (qpoly::deg(diag[i]) < 1) continue;  // trivial invariant factor
    QPoly qi = diag[i];
    if (!qpoly::is_integral(qi))
      throw std::logic_error("frobenius_form: invariant factor not integral");
    IntPolynomial q = qpoly::to_int(qi);
    f.invariant_factors.push_back(q);
    f.blocks.push_back(companion(q));
    // cokernel generator for this factor
    std::vector<QPoly> w(n);
    for (int k = 0; k < n; ++k) w[k] = qpoly::divmod(uinv[k][i], chi).second;
    std::vector<Rat> gen = eval_poly_vector(w, mpow);
    // columns b_{d-1} = gen, b_{j-1} = M b_j + a_j gen (Horner tails), so
    // that M acts as the left companion matrix on them
    int d = q.degree();
    std::vector<std::vector<Rat>> cols(d, std::vector<Rat>(n));
    cols[d - 1] = gen;
    for (int j = d - 1; j >= 1; --j) {
      std::vector<Rat> next(n);
      for (int r = 0; r < n; ++r) {
        Rat s = 0;
        for (int c = 0; c < n; ++c) s += Rat(m.at(r, c)) * cols[j][c];
        next[r] = s + Rat(q.coeff(j)) * gen[r];
      }
      cols[j - 1] = next;
    }
    for (int j = 0; j < d; ++j) columns.push_back(cols[j]);
  }
  if (static_cast<int>(columns.size()) != n)
    throw std::logic_error("frobenius_form: generator columns do not fill the space");
  RatMatrix s(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) s.at(i, j) = columns[j][i];
  f.transform = s;
  // hard check: M S = S D and S invertible
  RatMatrix d = RatMatrix(f.assemble());
  if (!(RatMatrix(m) * s == s * d)) throw std::logic_error("frobenius_form: M S != S D");
  (void)s.inverse();  // throws if singular
  return f;
}

}  // namespace toralsym
