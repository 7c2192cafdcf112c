#include "toralsym/dynamics.hpp"

#include <algorithm>
#include <sstream>

#include "toralsym/exactlin.hpp"

namespace toralsym {

namespace {

Rat frac_part(const Rat& r) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return r - Rat(f);
}

}  // namespace

TorusPoint TorusPoint::canonical(std::vector<Rat> coords) {
  TorusPoint t;
  t.x.reserve(coords.size());
  for (const Rat& r : coords) t.x.push_back(frac_part(r));
  return t;
}

std::string TorusPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i].get_str();
  os << ")";
  return os.str();
}

TorusPoint apply_mod1(const IntMatrix& m, const TorusPoint& t) {
  if (m.cols() != t.dim()) throw dimension_error("apply_mod1: dimension mismatch");
  std::vector<Rat> y(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols(); ++j) s += Rat(m.at(i, j)) * t.x[j];
    y[i] = s;
  }
  return TorusPoint::canonical(std::move(y));
}

bool affine_symmetry_check(const TorusPoint& t, const IntMatrix& g, const IntMatrix& m,
                           bool reversing) {
  if (g.dim() != m.dim() || t.dim() != m.dim())
    throw dimension_error("affine_symmetry_check: dimension mismatch");
  if (!is_unimodular(g) || !is_unimodular(m))
    throw unimodularity_error("affine_symmetry_check: unimodular matrices required");
  bool linear_ok = reversing ? g * m == inverse_unimodular(m) * g : g * m == m * g;
  if (!linear_ok) return false;
  TorusPoint canon = TorusPoint::canonical(t.x);
  return apply_mod1(m, canon) == canon;
}

Int periodic_point_count(const IntMatrix& m, int k) {
  if (k < 1) throw std::invalid_argument("periodic_point_count: k >= 1 required");
  IntMatrix mk = mat_pow(m, k) - IntMatrix::identity(m.dim());
  Int d = det(mk);
  if (d == 0) throw degenerate_orbit_error(k);
  return abs(d);
}

long mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n >= 1 required");
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

OrbitData orbit_counts(const IntMatrix& m, int depth) {
  if (depth < 1) throw std::invalid_argument("orbit_counts: depth >= 1 required");
  OrbitData out;
  for (int k = 1; k <= depth; ++k) out.a.push_back(periodic_point_count(m, k));
  for (int k = 1; k <= depth; ++k) {
    Int s = 0;
    for (int l = 1; l <= k; ++l) {
      if (k % l != 0) continue;
      s += Int(mobius(k / l)) * out.a[l - 1];
    }
    Int c = exact_div(s, Int(k));  // Moebius inversion yields integers
    if (c < 0) throw std::logic_error("orbit_counts: negative orbit count");
    out.c.push_back(c);
  }
  return out;
}

OrbitData zeta_series(const IntMatrix& m, int depth) {
  OrbitData out = orbit_counts(m, depth);
  out.zeta_log.assign(depth + 1, Rat(0));
  for (int k = 1; k <= depth; ++k) out.zeta_log[k] = Rat(out.a[k - 1]) / Rat(k);
  // exp of the series: m * E_m = sum_{j=1..m} j * L_j * E_{m-j}
  out.zeta.assign(depth + 1, Rat(0));
  out.zeta[0] = 1;
  for (int t = 1; t <= depth; ++t) {
    Rat s = 0;
    for (int j = 1; j <= t; ++j) s += Rat(j) * out.zeta_log[j] * out.zeta[t - j];
    out.zeta[t] = s / Rat(t);
  }
  return out;
}

std::vector<OrbitRow> orbit_table(const IntMatrix& m, int depth) {
  std::vector<OrbitRow> rows(depth);
  for (int k = 1; k <= depth; ++k) {
    rows[k - 1].k = k;
    try {
      rows[k - 1].a = periodic_point_count(m, k);
    } catch (const degenerate_orbit_error&) {
      rows[k - 1].degenerate = true;
    }
  }
  for (int k = 1; k <= depth; ++k) {
    if (rows[k - 1].degenerate) continue;
    bool all_defined = true;
    Int s = 0;
    for (int l = 1; l <= k; ++l) {
      if (k % l != 0) continue;
      if (!rows[l - 1].a) {
        all_defined = false;
        break;
      }
      s += Int(mobius(k / l)) * *rows[l - 1].a;
    }
    if (all_defined) rows[k - 1].c = exact_div(s, Int(k));
  }
  return rows;
}

std::vector<TorusPoint> enumerate_fixed_points(const IntMatrix& m, int k) {
  int n = m.dim();
  IntMatrix a = mat_pow(m, k) - IntMatrix::identity(n);
  if (det(a) == 0) throw degenerate_orbit_error(k);
  // solutions of A t = 0 (mod 1) through U A V = D: t = V D^-1 u with
  // u_i ranging over [0, d_i)
  SmithDecompositionZ s = smith_z(a);
  std::vector<Int> d(n);
  for (int i = 0; i < n; ++i) d[i] = s.D.at(i, i);
  std::vector<TorusPoint> out;
  std::vector<Int> u(n, Int(0));
  for (;;) {
    std::vector<Rat> coords(n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) coords[i] += Rat(s.V.at(i, j)) * (Rat(u[j]) / Rat(d[j]));
    out.push_back(TorusPoint::canonical(std::move(coords)));
    int i = 0;
    while (i < n && u[i] + 1 == d[i]) u[i++] = 0;
    if (i == n) break;
    u[i] += 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TorusPoint> two_division_points(int n) {
  std::vector<TorusPoint> out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<Rat> coords(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1L << i)) coords[i] = Rat(1, 2);
    out.push_back(TorusPoint::canonical(std::move(coords)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toralsym
