#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toralsym/matrix.hpp"

namespace toralsym {

/// Point of the n-torus with exact rational coordinates, canonical
/// representatives in [0,1).
struct TorusPoint {
  std::vector<Rat> x;

  static TorusPoint canonical(std::vector<Rat> coords);
  int dim() const { return static_cast<int>(x.size()); }
  bool operator==(const TorusPoint&) const = default;
  bool operator<(const TorusPoint& o) const { return x < o.x; }
  std::string to_string() const;
};

/// Image of a torus point under an integer matrix, reduced mod 1.
TorusPoint apply_mod1(const IntMatrix& m, const TorusPoint& t);

/// Periodic-point counts a_k, true-orbit counts c_k and the Artin-Mazur
/// zeta series: zeta_log[k] = a_k / k, zeta = exp of that series, exact
/// rational coefficients up to the requested depth.
struct OrbitData {
  std::vector<Int> a;        // a_1 .. a_K
  std::vector<Int> c;        // c_1 .. c_K
  std::vector<Rat> zeta_log;  // coefficients of t^0 .. t^K
  std::vector<Rat> zeta;
};

/// One table row for reporting; degenerate rows (eigenvalue 1 of M^k) are
/// flagged instead of erroring.
struct OrbitRow {
  int k = 0;
  std::optional<Int> a;
  std::optional<Int> c;
  bool degenerate = false;
};

/// (t, G) is an affine (reversing) symmetry of (0, M) iff G is one in
/// GL(n,Z) and M t = t (mod 1).
bool affine_symmetry_check(const TorusPoint& t, const IntMatrix& g, const IntMatrix& m,
                           bool reversing);

/// a_k = |det(M^k - 1)|; throws degenerate_orbit_error when an eigenvalue
/// of M^k is 1.
Int periodic_point_count(const IntMatrix& m, int k);

long mobius(long n);

/// a_1..a_K and the Moebius-inverted true-orbit counts c_1..c_K.
OrbitData orbit_counts(const IntMatrix& m, int depth);

/// orbit_counts plus the zeta series fields.
OrbitData zeta_series(const IntMatrix& m, int depth);

/// Tolerant per-row version for reporting: degenerate k flagged, c_k
/// computed only when every divisor row is defined.
std::vector<OrbitRow> orbit_table(const IntMatrix& m, int depth);

/// All a_k canonical solutions of M^k t = t (mod 1), enumerated through the
/// Smith decomposition of M^k - 1, sorted.
std::vector<TorusPoint> enumerate_fixed_points(const IntMatrix& m, int k);

/// The 2^n points with coordinates in {0, 1/2} (the solutions of t = -t).
std::vector<TorusPoint> two_division_points(int n);

}  // namespace toralsym
