#include "toralsym/matrix.hpp"

#include <sstream>

namespace toralsym {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw dimension_error("ragged row in matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Int>> v;
  for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
  return from_rows(v);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Int IntMatrix::trace() const {
  Int s = 0;
  for (int i = 0; i < dim(); ++i) s += at(i, i);
  return s;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int IntMatrix::height() const {
  Int h = 0;
  for (const Int& x : e_) {
    Int a = abs(x);
    if (a > h) h = a;
  }
  return h;
}

int IntMatrix::support() const {
  int s = 0;
  for (const Int& x : e_)
    if (x != 0) ++s;
  return s;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (Int& x : m.e_) x = -x;
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix shape mismatch in +");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix shape mismatch in -");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Int& c) {
  for (Int& x : e_) x *= c;
  return *this;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matrix shape mismatch in *");
  IntMatrix c(a.rows(), b.cols());
  Int t;
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        t = aik * b.at(k, j);
        c.at(i, j) += t;
      }
    }
  return c;
}

IntMatrix operator*(const Int& c, IntMatrix a) { return a *= c; }

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) at(i, j) = m.at(i, j);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_identity() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  for (const Rat& x : e_)
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix RatMatrix::to_int() const {
  if (!is_integral()) throw std::domain_error("RatMatrix::to_int: non-integral entry");
  IntMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).get_num();
  return m;
}

RatMatrix RatMatrix::inverse() const {
  int n = dim();
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("RatMatrix::inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        swap(a.at(piv, j), a.at(col, j));
        swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw dimension_error("matrix shape mismatch in +");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) += b.at(i, j);
  return a;
}

RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw dimension_error("matrix shape mismatch in -");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= b.at(i, j);
  return a;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matrix shape mismatch in *");
  RatMatrix c(a.rows(), b.cols());
  Rat t;
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        t = aik * b.at(k, j);
        c.at(i, j) += t;
      }
    }
  return c;
}

RatMatrix operator*(const Rat& c, RatMatrix a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) *= c;
  return a;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace toralsym
