#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toralsym/polynomial.hpp"

namespace toralsym {

/// Factorization over Z: monic (or primitive) irreducible factors with
/// multiplicities, deterministic order (degree, then coefficients).
struct Factorization {
  std::vector<std::pair<IntPolynomial, int>> factors;
  Int content = 1;  // integer content * sign of the input

  IntPolynomial product() const;
};

/// Root counts of a square-free polynomial: n1 real roots, n2 pairs of
/// complex-conjugate roots, n1 + 2*n2 = degree.
struct RootSignature {
  int n1 = 0;
  int n2 = 0;
};

/// Irreducible factorization in Z[x] (Zassenhaus: square-free split,
/// factorization mod p, Hensel lifting, subset recombination).
Factorization factor_over_Z(const IntPolynomial& p);

bool is_irreducible_over_Z(const IntPolynomial& p);

/// Yun square-free decomposition: list of (square-free factor, multiplicity).
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

/// Coefficient test a_{n-k} = a0 * a_k with a0 = +-1 (the reciprocity
/// condition P(x) = (-1)^n x^n P(1/x) / det). Requires monic p, p(0) != 0.
bool is_self_reciprocal(const IntPolynomial& p);

/// Monic partner with reciprocal root set: x^d p(1/x) / p(0). Requires
/// p(0) = +-1.
IntPolynomial reciprocal_partner(const IntPolynomial& p);

/// Exact real-root count by Sturm sign variations over (-inf, +inf).
/// Requires square-free input (enforced).
RootSignature real_root_count(const IntPolynomial& p);

/// The m-th cyclotomic polynomial.
IntPolynomial cyclotomic(int m);

/// All m with phi(m) <= d, ascending (the candidate cyclotomic orders for a
/// factor of degree <= d).
std::vector<int> cyclotomic_orders_up_to_degree(int d);

/// Whether every irreducible factor of monic p is cyclotomic; if so the lcm
/// of their orders (= the order of any semi-simple matrix with that
/// characteristic polynomial).
std::pair<bool, std::optional<long>> cyclotomic_profile(const IntPolynomial& p);

int euler_phi(int m);

}  // namespace toralsym
