#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "toralsym/numeric.hpp"

namespace toralsym {

/// Dense matrix of arbitrary-precision integers, row-major. Square matrices
/// (toral automorphisms, candidate symmetries) are the central case;
/// rectangular shapes appear only as linear maps fed to integer_kernel.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  /// Dimension of a square matrix; throws on rectangular input.
  int dim() const {
    if (!square()) throw dimension_error("square matrix required");
    return rows_;
  }

  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<Int>& entries() const { return e_; }
  std::vector<Int>& entries() { return e_; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transpose() const;
  Int trace() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Largest absolute entry (the "height" used by canonical orderings).
  Int height() const;
  /// Number of nonzero entries.
  int support() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  IntMatrix& operator*=(const Int& c);

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& c, IntMatrix a);

/// Matrix of exact rationals; every entry canonical (lowest terms, positive
/// denominator) by construction.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  explicit RatMatrix(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  int dim() const {
    if (!square()) throw dimension_error("square matrix required");
    return rows_;
  }

  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RatMatrix&) const = default;

  RatMatrix transpose() const;
  bool is_identity() const;
  bool is_integral() const;

  /// Integer part; throws unless is_integral().
  IntMatrix to_int() const;

  /// Exact inverse by Gauss-Jordan; throws std::domain_error when singular.
  RatMatrix inverse() const;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& c, RatMatrix a);

}  // namespace toralsym
