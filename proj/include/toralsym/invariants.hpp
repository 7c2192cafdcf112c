#pragma once

#include <vector>

#include "toralsym/exactlin.hpp"
#include "toralsym/matrix.hpp"
#include "toralsym/polynomial.hpp"

namespace toralsym {

/// Polynomial invariants q_1 | q_2 | ... | q_r of a matrix (monic, product
/// equals the characteristic polynomial, q_r is the minimal polynomial) and
/// the index ell of trivial invariant factors.
struct InvariantFactors {
  std::vector<IntPolynomial> q;
  int ell = 0;  // largest k with p_k = 1, so r = n - ell

  const IntPolynomial& minimal_polynomial() const { return q.back(); }
};

/// Frobenius normal form: M = S * diag(B_1, ..., B_r) * S^-1 with B_i the
/// left companion matrix of q_i.
struct FrobeniusForm {
  std::vector<IntMatrix> blocks;
  std::vector<IntPolynomial> invariant_factors;
  RatMatrix transform;  // S

  IntMatrix assemble() const;  // block-diagonal D
};

/// Invariant factors through the gcd-of-minors chain: p_k = gcd of all k x k
/// minors of (x*1 - M), q_i = p_{ell+i} / p_{ell+i-1}.
InvariantFactors polynomial_invariants(const IntMatrix& m);

/// Least-degree monic annihilator, computed independently of
/// polynomial_invariants through Krylov elimination on 1, M, M^2, ...
IntPolynomial minimal_polynomial(const IntMatrix& m);

bool is_cyclic(const IntMatrix& m);       // deg minimal poly == n
bool is_simple(const IntMatrix& m);       // charpoly square-free
bool is_semisimple(const IntMatrix& m);   // minimal poly square-free

enum class CompanionSide { left, right };

/// Companion matrix of a monic polynomial; the right form is R * A_left * R
/// with R the anti-diagonal involution.
IntMatrix companion(const IntPolynomial& p, CompanionSide side = CompanionSide::left);

/// Anti-diagonal involution R (R^2 = 1).
IntMatrix reversal_involution(int n);

/// Frobenius form with an explicit rational transform, built from the Smith
/// reduction of (x*1 - M) over Q[x].
FrobeniusForm frobenius_form(const IntMatrix& m);

}  // namespace toralsym
