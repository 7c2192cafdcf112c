#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toralsym/matrix.hpp"
#include "toralsym/symmetry.hpp"

namespace toralsym {

struct NecessaryConditions {
  bool self_reciprocal = false;  // charpoly passes the reciprocity test
  bool det_ok = false;           // det = +-1
  std::optional<std::string> parity_obstruction;

  bool pass() const { return self_reciprocal && det_ok && !parity_obstruction; }
};

struct StructuralFlags {
  bool is_symplectic = false;            // M^t J M = J (even dimension)
  bool is_symmetric_symplectic = false;  // symplectic and M^t = M
  bool is_skew_symplectic = false;       // symplectic and M^t = -M
  bool is_integer_orthogonal = false;    // M M^t = 1
};

/// Outcome of a bounded witness search: a verified witness, or "none within
/// the recorded radius" (never a claim of nonexistence), or excluded
/// outright by a failed necessary condition.
enum class SearchVerdict { found, none_within_radius, excluded };

struct WitnessSearch {
  SearchVerdict verdict = SearchVerdict::none_within_radius;
  std::optional<IntMatrix> witness;
  int radius = 0;
  int module_rank = 0;
  std::string path;  // which fast path or search stage produced the witness
};

/// Reversor-order analysis for a verified witness G. The family claim
/// covers every reversor t * M^k * G with t in the torsion found: its square
/// is t * (G t G^-1) * G^2, independent of k, so finitely many squares
/// decide the orders of the whole family.
struct ReversorOrderAnalysis {
  bool witness_valid = false;
  bool applicable = false;  // S(M)/<M> finiteness detected (rank 1, torsion
                            // complete, M of infinite order)
  std::string reason;
  std::optional<std::vector<Int>> g_squared_in_commutant;  // coordinates
  std::optional<std::pair<int, long>> g_squared_signed_power;  // G^2 = sign * M^l
  bool g_fourth_is_identity = false;
  std::optional<long> minimal_reversor_order;
  bool involutory_in_family = false;
  std::optional<IntMatrix> involutory_witness;
  bool semidirect_confirmed = false;  // R(M) = S(M) x_s C2 (involutory
                                      // reversor exists and M^2 != 1)
};

struct ReversibilityReport {
  NecessaryConditions necessary;
  StructuralFlags structural;
  bool q_reversible = false;
  std::optional<RatMatrix> q_reversor;  // involutory, G M G^-1 = M^-1
  WitnessSearch z_search;
  std::optional<WitnessSearch> pgl_search;
  std::optional<IntMatrix> weak_witness;
  std::optional<Int> weak_det;
  std::optional<ReversorOrderAnalysis> reversor_orders;
};

NecessaryConditions necessary_conditions(const IntMatrix& m);

StructuralFlags structural_shortcuts(const IntMatrix& m);

/// Standard symplectic form J (dimension 2n).
IntMatrix symplectic_form(int two_n);

/// Reversibility in GL(n,Q): true iff every invariant factor is
/// self-reciprocal; on success the returned reversor is an involution with
/// G M G^-1 = M^-1, built from the Frobenius form and the block reversal
/// involutions.
std::pair<bool, std::optional<RatMatrix>> q_reversibility(const IntMatrix& m);

/// Bounded search for a unimodular G with G M = M^-1 G. Fast paths
/// (symmetric-symplectic J, reversal involution for companion shapes,
/// torsion products) run before the graded box enumeration over the
/// reversor module.
WitnessSearch z_reversor_search(const IntMatrix& m, int radius = 5);

/// Bounded search for a unimodular G with G M = -M^-1 G (reversibility in
/// PGL(n,Z)); a witness makes M^2 reversible in the classical sense.
WitnessSearch pgl_reversor_search(const IntMatrix& m, int radius = 5);

/// Smallest nonsingular integer G with G = M G M within the coefficient
/// box; unimodularity is not required. Returns the canonical minimal
/// element (height, then support, then closeness to 1, then entry order).
std::optional<IntMatrix> weak_reversibility_search(const IntMatrix& m, int radius = 3);

/// The solution module {G : G M = M^-1 G} as a lattice basis (test hook and
/// search substrate).
std::vector<IntMatrix> reversor_module(const IntMatrix& m, bool projective = false);

ReversorOrderAnalysis reversor_order_analysis(const IntMatrix& m, const IntMatrix& g);

/// Full pipeline used by the CLI.
ReversibilityReport analyze_reversibility(const IntMatrix& m, int z_radius = 5,
                                          bool projective = false, int weak_radius = 3);

}  // namespace toralsym
