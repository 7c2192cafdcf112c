#pragma once

#include <optional>
#include <vector>

#include "toralsym/matrix.hpp"
#include "toralsym/polynomial.hpp"

namespace toralsym {

/// U * A * V = D with U, V unimodular and D diagonal, d_i >= 0,
/// d_i | d_{i+1}.
struct SmithDecompositionZ {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// Exact determinant, fraction-free (Bareiss). Singular input returns 0.
Int det(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// det(x*1 - M), monic of degree n (Faddeev-LeVerrier, exact divisions).
IntPolynomial charpoly(const IntMatrix& m);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Binary powering; k < 0 requires unimodular m and routes through
/// inverse_unimodular.
IntMatrix mat_pow(const IntMatrix& m, long k);

/// Integer inverse of a unimodular matrix via the characteristic-polynomial
/// identity M^-1 = -(1/a0) * sum a_{l+1} M^l.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Evaluate a polynomial at a square matrix.
IntMatrix poly_at_matrix(const IntPolynomial& p, const IntMatrix& m);

SmithDecompositionZ smith_z(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of a:
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped. This is the canonical form used for
/// every module basis the library returns.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Basis of {v in Z^k : L v = 0} as a free module, rows of the returned
/// matrix, in Hermite-reduced canonical form.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& l);

/// Coefficients expressing target in the lattice spanned by the rows of
/// basis_hnf (which must be in HNF), or nullopt if target is not in the
/// lattice.
std::optional<std::vector<Int>> lattice_solve(const IntMatrix& basis_hnf,
                                              const std::vector<Int>& target);

}  // namespace toralsym
