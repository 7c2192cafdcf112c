#include "toralsym/exactlin.hpp"

#include <algorithm>

namespace toralsym {

Int det(const IntMatrix& m) {
  int n = m.dim();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = k; j < n; ++j) swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = exact_div(t, prev);
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  Int d = a.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

IntPolynomial charpoly(const IntMatrix& m) {
  int n = m.dim();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix acc = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    acc = m * acc;
    Int ck = exact_div(acc.trace(), Int(-k));
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) acc.at(i, i) += ck;
  }
  return IntPolynomial::from_coeffs(std::move(c));
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) { return a * b; }

IntMatrix mat_pow(const IntMatrix& m, long k) {
  int n = m.dim();
  IntMatrix base = m;
  if (k < 0) {
    base = inverse_unimodular(m);
    k = -k;
  }
  IntMatrix r = IntMatrix::identity(n);
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  int n = m.dim();
  IntPolynomial p = charpoly(m);
  const Int& a0 = p.coeff(0);
  if (a0 != 1 && a0 != -1)
    throw unimodularity_error("inverse_unimodular: |det| != 1");
  // M^-1 = -(1/a0) * (a1 + a2 M + ... + a_n M^{n-1}), Horner from the top.
  IntMatrix acc(n, n);
  for (int i = 0; i < n; ++i) acc.at(i, i) = p.coeff(n);
  for (int j = n - 1; j >= 1; --j) {
    acc = m * acc;
    for (int i = 0; i < n; ++i) acc.at(i, i) += p.coeff(j);
  }
  Int s = -a0;  // -(1/a0) == -a0 for a0 = +-1
  acc *= s;
  return acc;
}

IntMatrix poly_at_matrix(const IntPolynomial& p, const IntMatrix& m) {
  int n = m.dim();
  IntMatrix acc(n, n);
  if (p.is_zero()) return acc;
  for (int i = 0; i < n; ++i) acc.at(i, i) = p.leading();
  for (int j = p.degree() - 1; j >= 0; --j) {
    acc = m * acc;
    for (int i = 0; i < n; ++i) acc.at(i, i) += p.coeff(j);
  }
  return acc;
}

namespace {

// Row/column operation helpers for the Smith reduction, with transform
// tracking.
void swap_rows(IntMatrix& a, int i, int j) {
  for (int k = 0; k < a.cols(); ++k) swap(a.at(i, k), a.at(j, k));
}
void swap_cols(IntMatrix& a, int i, int j) {
  for (int k = 0; k < a.rows(); ++k) swap(a.at(k, i), a.at(k, j));
}
void add_row(IntMatrix& a, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int k = 0; k < a.cols(); ++k) a.at(dst, k) += f * a.at(src, k);
}
void add_col(IntMatrix& a, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int k = 0; k < a.rows(); ++k) a.at(k, dst) += f * a.at(k, src);
}
void negate_row(IntMatrix& a, int i) {
  for (int k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
}

}  // namespace

SmithDecompositionZ smith_z(const IntMatrix& a) {
  int m = a.rows(), k = a.cols();
  SmithDecompositionZ s{IntMatrix::identity(m), a, IntMatrix::identity(k)};
  IntMatrix& d = s.D;
  int t = 0;
  int steps = std::min(m, k);
  while (t < steps) {
    // pivot: nonzero of minimal absolute value in the remaining block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < k; ++j) {
        if (d.at(i, j) == 0) continue;
        Int v = abs(d.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      swap_rows(d, pi, t);
      swap_rows(s.U, pi, t);
    }
    if (pj != t) {
      swap_cols(d, pj, t);
      swap_cols(s.V, pj, t);
    }
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = fdiv(d.at(i, t), d.at(t, t));
        add_row(d, i, t, -q);
        add_row(s.U, i, t, -q);
        if (d.at(i, t) != 0) {
          swap_rows(d, i, t);
          swap_rows(s.U, i, t);
          clean = false;
        }
      }
      for (int j = t + 1; j < k; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = fdiv(d.at(t, j), d.at(t, t));
        add_col(d, j, t, -q);
        add_col(s.V, j, t, -q);
        if (d.at(t, j) != 0) {
          swap_cols(d, j, t);
          swap_cols(s.V, j, t);
          clean = false;
        }
      }
    }
    if (sgn(d.at(t, t)) < 0) {
      negate_row(d, t);
      negate_row(s.U, t);
    }
    // divisibility: pull any entry d(t,t) does not divide into column t and
    // restart the pivot cleanup
    bool redo = false;
    for (int i = t + 1; i < m && !redo; ++i)
      for (int j = t + 1; j < k && !redo; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          add_row(d, t, i, Int(1));
          add_row(s.U, t, i, Int(1));
          redo = true;
        }
    if (!redo) ++t;
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  int m = h.rows(), n = h.cols();
  int pivot_row = 0;
  std::vector<int> pivot_cols;
  for (int col = 0; col < n && pivot_row < m; ++col) {
    // euclidean reduction of the column below pivot_row
    while (true) {
      int best = -1;
      Int bv = 0;
      for (int i = pivot_row; i < m; ++i) {
        if (h.at(i, col) == 0) continue;
        Int v = abs(h.at(i, col));
        if (best < 0 || v < bv) {
          best = i;
          bv = v;
        }
      }
      if (best < 0) break;
      if (best != pivot_row) swap_rows(h, best, pivot_row);
      bool done = true;
      for (int i = pivot_row + 1; i < m; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = fdiv(h.at(i, col), h.at(pivot_row, col));
        add_row(h, i, pivot_row, -q);
        if (h.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (sgn(h.at(pivot_row, col)) < 0) negate_row(h, pivot_row);
    for (int i = 0; i < pivot_row; ++i) {
      Int q = fdiv(h.at(i, col), h.at(pivot_row, col));
      add_row(h, i, pivot_row, -q);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  IntMatrix out(pivot_row, n);
  for (int i = 0; i < pivot_row; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& l) {
  int m = l.rows(), k = l.cols();
  // Row-reduce [L^t | I]; rows of the transform opposite zero rows of the
  // echelon part span the kernel.
  IntMatrix work(k, m + k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j) work.at(i, j) = l.at(j, i);
    work.at(i, m + i) = 1;
  }
  int pivot_row = 0;
  for (int col = 0; col < m && pivot_row < k; ++col) {
    while (true) {
      int best = -1;
      Int bv = 0;
      for (int i = pivot_row; i < k; ++i) {
        if (work.at(i, col) == 0) continue;
        Int v = abs(work.at(i, col));
        if (best < 0 || v < bv) {
          best = i;
          bv = v;
        }
      }
      if (best < 0) break;
      if (best != pivot_row) swap_rows(work, best, pivot_row);
      bool done = true;
      for (int i = pivot_row + 1; i < k; ++i) {
        if (work.at(i, col) == 0) continue;
        Int q = fdiv(work.at(i, col), work.at(pivot_row, col));
        add_row(work, i, pivot_row, -q);
        if (work.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (work.at(pivot_row, col) != 0) ++pivot_row;
  }
  IntMatrix basis(k - pivot_row, k);
  for (int i = pivot_row; i < k; ++i)
    for (int j = 0; j < k; ++j) basis.at(i - pivot_row, j) = work.at(i, m + j);
  IntMatrix canon = hermite_normal_form(basis);
  std::vector<std::vector<Int>> out;
  for (int i = 0; i < canon.rows(); ++i) {
    std::vector<Int> v(k);
    for (int j = 0; j < k; ++j) v[j] = canon.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Int>> lattice_solve(const IntMatrix& basis_hnf,
                                              const std::vector<Int>& target) {
  int r = basis_hnf.rows(), n = basis_hnf.cols();
  if (static_cast<int>(target.size()) != n) throw dimension_error("lattice_solve: size mismatch");
  std::vector<Int> v = target;
  std::vector<Int> coeff(r, Int(0));
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    if (row < r && basis_hnf.at(row, col) != 0) piv = row;
    if (piv < 0) {
      if (v[col] != 0) return std::nullopt;
      continue;
    }
    const Int& p = basis_hnf.at(piv, col);
    if (v[col] % p != 0) return std::nullopt;
    Int q = exact_div(v[col], p);
    if (q != 0)
      for (int j = col; j < n; ++j) v[j] -= q * basis_hnf.at(piv, j);
    coeff[piv] = q;
    ++row;
  }
  for (const Int& x : v)
    if (x != 0) return std::nullopt;
  return coeff;
}

}  // namespace toralsym
