#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toralsym/exactlin.hpp"
#include "toralsym/matrix.hpp"

namespace toralsym {

/// Z-module basis of {G in Mat(n,Z) : MG = GM}, canonical (Hermite form of
/// the vectorized basis). For M with irreducible characteristic polynomial
/// this is the order O of the associated number field.
struct CommutantModule {
  int n = 0;
  std::vector<IntMatrix> basis;
  IntMatrix basis_hnf;  // rank x n^2, rows = vectorized basis

  int rank() const { return static_cast<int>(basis.size()); }
  std::optional<std::vector<Int>> coordinates(const IntMatrix& g) const;
  bool contains(const IntMatrix& g) const { return coordinates(g).has_value(); }
  bool contains_identity() const;
  /// products of basis elements stay in the span (the commutant is a ring)
  bool ring_closed() const;
  IntMatrix combine(const std::vector<Int>& coeff) const;
};

/// S(M) = T x Z^r for simple unimodular M. When the structure cannot be
/// claimed (non-simple input), only the commutant rank is reported.
struct GroupStructure {
  bool structure_known = false;
  std::vector<long> torsion;  // cyclic factor orders, d_i | d_{i+1}
  int rank = 0;
  bool torsion_complete = false;
  int commutant_rank = 0;

  long torsion_order() const {
    long o = 1;
    for (long d : torsion) o *= d;
    return o;
  }
};

struct TorsionSearchResult {
  std::vector<IntMatrix> elements;    // the full finite subgroup found
  std::vector<IntMatrix> generators;  // independent cyclic generators
  std::vector<long> invariant_factors;
  long order = 1;
  bool complete = false;  // theory pins the torsion exactly
  bool pinned = false;    // exact idempotent enumeration ran
  int radius = 0;
  bool box_exhausted = false;  // the coefficient box was fully scanned
  bool order3_found = false;
  bool sqrt_of_m_found = false;  // some G in the box satisfies G^2 = M
};

struct GeneratorSetReport {
  bool pairwise_commute = false;
  bool independent = false;  // no bounded product relation of infinite-order generators
  bool independence_checked = false;
  std::vector<std::optional<long>> orders;  // nullopt = infinite
  bool consistent = false;
  std::string structure;  // e.g. "C8 x Z"
};

CommutantModule commutant_basis(const IntMatrix& m);

/// Torsion x rank of the centralizer of a simple unimodular matrix; rank by
/// the per-factor root-signature formula, torsion by torsion_search.
GroupStructure centralizer_structure(const IntMatrix& m, int torsion_radius = 3);

/// Finite order of a unimodular matrix, or nullopt for infinite order.
/// Finite exactly when the characteristic polynomial is a product of
/// cyclotomics and the power check G^lcm = 1 confirms semi-simplicity.
std::optional<long> matrix_order(const IntMatrix& g);

/// Finite-order subgroup of the centralizer. For simple M whose factors are
/// all real-rooted or cyclotomic the enumeration is exact (complete = true);
/// otherwise a bounded box search over the commutant lattice with
/// coefficients in [-radius, radius].
TorsionSearchResult torsion_search(const IntMatrix& m, int radius = 3);

bool verify_symmetry(const IntMatrix& m, const IntMatrix& g);

/// Minimal k <= k_max with G M^k = M^k G (the paper's #_F(G)), or nullopt.
std::optional<long> ksym_index(const IntMatrix& m, const IntMatrix& g, long k_max);

/// Consistency checks for a claimed generating set: commutation,
/// unimodularity (throws on violation), mutual commutation, orders, bounded
/// independence of the infinite-order part. Not a completeness proof.
GeneratorSetReport verify_generator_set(const IntMatrix& m, const std::vector<IntMatrix>& gens);

/// Orders of finite-order elements possible in GL(n,Z): m with
/// sum of phi(p^a) over maximal prime powers <= n (the factor 2 is free for
/// m = 2u, u odd, via -1).
std::vector<long> admissible_finite_orders(int n);

}  // namespace toralsym
