#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toralsym/invariants.hpp"
#include "toralsym/polyring.hpp"
#include "toralsym/reversibility.hpp"

using namespace toralsym;

namespace {

const IntMatrix kM1 = IntMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 1}});
const IntMatrix kM2 = IntMatrix::from_rows({{1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
const IntMatrix kWilson = IntMatrix::from_rows({{5, 7}, {7, 10}});
const IntMatrix kM8 =
    IntMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}});
const IntMatrix kEightCat = IntMatrix::from_rows({{0, 1, 0, 0, 0, 0, 0, 0},
                                                  {1, 1, 0, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 1, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 1, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 1, 0, 0},
                                                  {0, 0, 0, 0, 0, 0, 1, 0},
                                                  {0, 0, 0, 0, 0, 0, 0, 1},
                                                  {0, 0, 1, -1, -4, 3, 4, -1}});
const IntPolynomial kSalem{1, -2, -2, -2, 1};

// random element of Sp(4,Z) as a product of elementary symplectic matrices
IntMatrix random_symplectic4(std::mt19937_64& rng) {
  IntMatrix s = IntMatrix::identity(4);
  std::uniform_int_distribution<int> cd(-2, 2);
  for (int step = 0; step < 6; ++step) {
    IntMatrix e = IntMatrix::identity(4);
    int b00 = cd(rng), b01 = cd(rng), b11 = cd(rng);
    if (step % 2 == 0) {  // [[1, B], [0, 1]] with B symmetric
      e.at(0, 2) = b00;
      e.at(0, 3) = b01;
      e.at(1, 2) = b01;
      e.at(1, 3) = b11;
    } else {  // [[1, 0], [B, 1]]
      e.at(2, 0) = b00;
      e.at(2, 1) = b01;
      e.at(3, 0) = b01;
      e.at(3, 1) = b11;
    }
    s = s * e;
  }
  return s;
}

}  // namespace

TEST_CASE("necessary_conditions on the 3x3 pair, Salem companion, identity") {
  NecessaryConditions c1 = necessary_conditions(kM1);
  CHECK_FALSE(c1.self_reciprocal);
  CHECK(c1.det_ok);
  REQUIRE(c1.parity_obstruction.has_value());
  CHECK(*c1.parity_obstruction == "odd dimension with irreducible characteristic polynomial");

  NecessaryConditions c2 = necessary_conditions(kM2);
  REQUIRE(c2.parity_obstruction.has_value());

  NecessaryConditions cs = necessary_conditions(companion(kSalem));
  CHECK(cs.pass());

  NecessaryConditions ci = necessary_conditions(IntMatrix::identity(4));
  CHECK(ci.pass());
}

TEST_CASE("necessary_conditions: isolated-factor obstructions") {
  // (x^2 - x - 1)(x^2 - 3x + 1): the first factor's partner x^2 + x - 1 is
  // absent, an isolated even-degree factor with constant term -1
  IntMatrix m = IntMatrix(4, 4);
  {
    IntMatrix b1 = companion(IntPolynomial{-1, -1, 1});
    IntMatrix b2 = companion(IntPolynomial{1, -3, 1});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m.at(i, j) = b1.at(i, j);
        m.at(2 + i, 2 + j) = b2.at(i, j);
      }
  }
  NecessaryConditions c = necessary_conditions(m);
  CHECK_FALSE(c.self_reciprocal);
  REQUIRE(c.parity_obstruction.has_value());
  CHECK(c.parity_obstruction->find("isolated irreducible factor of even degree") !=
        std::string::npos);
}

TEST_CASE("q_reversibility: SL(2,Z) always, with verified involutory reversor") {
  std::mt19937_64 rng(321);
  int done = 0;
  while (done < 30) {
    IntMatrix m = oracles::random_sl2(rng, 1000);
    if (det(m) != 1) continue;
    auto [rev, wit] = q_reversibility(m);
    CHECK(rev);
    REQUIRE(wit.has_value());  // the op itself verifies involution + conjugation
    ++done;
  }
}

TEST_CASE("q_reversibility: compensation phenomena") {
  // 8-cat: product of the invariant factors is self-reciprocal, each factor
  // alone is not
  CHECK(is_self_reciprocal(charpoly(kEightCat)));
  auto [rev8, wit8] = q_reversibility(kEightCat);
  CHECK_FALSE(rev8);
  CHECK_FALSE(wit8.has_value());
  // single invariant (x^2-x-1)(x^2+x-1): reversible although the elementary
  // divisors separately violate reciprocity
  IntPolynomial p = IntPolynomial{-1, -1, 1} * IntPolynomial{-1, 1, 1};
  auto [revc, witc] = q_reversibility(companion(p));
  CHECK(revc);
  REQUIRE(witc.has_value());
}

TEST_CASE("z_reversor_search: Wilson matrix hits the symplectic fast path") {
  WitnessSearch ws = z_reversor_search(kWilson);
  REQUIRE(ws.verdict == SearchVerdict::found);
  CHECK(*ws.witness == IntMatrix::from_rows({{0, 1}, {-1, 0}}));
  CHECK(ws.path == "symmetric-symplectic J");
}

TEST_CASE("z_reversor_search: Table 1 matrix reversed by R") {
  WitnessSearch ws = z_reversor_search(kM8);
  REQUIRE(ws.verdict == SearchVerdict::found);
  CHECK(*ws.witness == reversal_involution(4));
}

TEST_CASE("z_reversor_search: 8-cat excluded by the Q-level verdict") {
  WitnessSearch ws = z_reversor_search(kEightCat);
  CHECK(ws.verdict == SearchVerdict::excluded);
  CHECK_FALSE(ws.witness.has_value());
}

TEST_CASE("pgl_reversor_search: 8-cat has a projective witness") {
  WitnessSearch ws = pgl_reversor_search(kEightCat, 5);
  REQUIRE(ws.verdict == SearchVerdict::found);
  IntMatrix g = *ws.witness;
  IntMatrix minv = inverse_unimodular(kEightCat);
  CHECK(g * kEightCat == (-minv) * g);
  // the square is then reversible in the classical sense
  IntMatrix m2 = kEightCat * kEightCat;
  CHECK(g * m2 == inverse_unimodular(m2) * g);
}

TEST_CASE("pgl_reversor_search: skew-symplectic J and identity") {
  IntMatrix j = symplectic_form(4);
  WitnessSearch ws = pgl_reversor_search(j, 3);
  REQUIRE(ws.verdict == SearchVerdict::found);
  CHECK(*ws.witness == j);
  CHECK(ws.path == "skew-symplectic J");

  WitnessSearch none = pgl_reversor_search(IntMatrix::identity(2), 3);
  CHECK(none.verdict == SearchVerdict::none_within_radius);
  CHECK(none.module_rank == 0);
}

TEST_CASE("structural_shortcuts") {
  IntMatrix j = symplectic_form(4);
  StructuralFlags fj = structural_shortcuts(j);
  CHECK(fj.is_symplectic);
  CHECK(fj.is_skew_symplectic);
  CHECK_FALSE(fj.is_symmetric_symplectic);

  IntMatrix perm = IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(structural_shortcuts(perm).is_integer_orthogonal);

  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 5; ++iter) {
    IntMatrix s = random_symplectic4(rng);
    IntMatrix m = s.transpose() * s;
    StructuralFlags f = structural_shortcuts(m);
    CHECK(f.is_symmetric_symplectic);
    WitnessSearch ws = z_reversor_search(m);
    REQUIRE(ws.verdict == SearchVerdict::found);
    CHECK(*ws.witness == symplectic_form(4));
  }
}

TEST_CASE("weak_reversibility_search examples") {
  SUBCASE("the quantum-map example admits small weak witnesses") {
    IntMatrix m = IntMatrix::from_rows({{4, 9}, {7, 16}});
    // the paper's witness is in the solution module
    IntMatrix gp = IntMatrix::from_rows({{3, 0}, {4, -3}});
    CHECK(m * gp * m == gp);
    CHECK(det(gp) == -9);
    // the canonical minimal element is smaller (height 3, det 2)
    auto g = weak_reversibility_search(m);
    REQUIRE(g.has_value());
    CHECK(m * *g * m == *g);
    CHECK(*g == IntMatrix::from_rows({{1, 3}, {-1, -1}}));
    CHECK(det(*g) == 2);
  }
  SUBCASE("identity picks identity") {
    auto g = weak_reversibility_search(IntMatrix::identity(2));
    REQUIRE(g.has_value());
    CHECK(g->is_identity());
  }
  SUBCASE("strong witnesses are weak witnesses") {
    IntMatrix g = IntMatrix::from_rows({{0, 1}, {-1, 0}});
    CHECK(kWilson * g * kWilson == g);
  }
}

TEST_CASE("reversor_order_analysis: Wilson matrix has no involutory reversor in the family") {
  IntMatrix g = IntMatrix::from_rows({{0, 1}, {-1, 0}});
  ReversorOrderAnalysis a = reversor_order_analysis(kWilson, g);
  CHECK(a.witness_valid);
  CHECK(a.applicable);
  REQUIRE(a.g_squared_signed_power.has_value());
  CHECK(a.g_squared_signed_power->first == -1);
  CHECK(a.g_squared_signed_power->second == 0);
  CHECK(a.g_fourth_is_identity);
  CHECK(a.minimal_reversor_order == 4);
  CHECK_FALSE(a.involutory_in_family);
  CHECK_FALSE(a.semidirect_confirmed);
}

TEST_CASE("reversor_order_analysis: involutory witness confirms the semi-direct structure") {
  ReversorOrderAnalysis a8 = reversor_order_analysis(kM8, reversal_involution(4));
  CHECK(a8.witness_valid);
  CHECK(a8.semidirect_confirmed);
  CHECK_FALSE(a8.applicable);  // M has finite order, the family analysis declines

  ReversorOrderAnalysis asal = reversor_order_analysis(companion(kSalem), reversal_involution(4));
  CHECK(asal.witness_valid);
  CHECK(asal.semidirect_confirmed);  // R(M) = S(M) x_s C2

  // 12-fold column of Table 1: R is an involutory reversor even though the
  // free generator does not commute with it
  IntMatrix m12 =
      IntMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 1, 0}});
  ReversorOrderAnalysis a12 = reversor_order_analysis(m12, reversal_involution(4));
  CHECK(a12.witness_valid);
  CHECK(a12.semidirect_confirmed);

  ReversorOrderAnalysis bad = reversor_order_analysis(kWilson, IntMatrix::identity(2));
  CHECK_FALSE(bad.witness_valid);
}

TEST_CASE("companion matrices of self-reciprocal polynomials: R reverses, semidirect structure") {
  std::mt19937_64 rng(999);
  int done = 0;
  while (done < 40) {
    int half = 1 + static_cast<int>(rng() % 4);
    int n = 2 * half;  // even degree up to 8
    std::vector<Int> c(n + 1);
    c[n] = 1;
    Int a0 = (rng() % 2) ? 1 : -1;
    c[0] = a0;
    for (int k = 1; k < half; ++k) {
      c[k] = static_cast<long>(rng() % 5) - 2;
      c[n - k] = a0 * c[k];
    }
    c[half] = static_cast<long>(rng() % 5) - 2;
    if (a0 == -1) c[half] = 0;
    IntPolynomial p = IntPolynomial::from_coeffs(std::move(c));
    if (!is_self_reciprocal(p)) continue;
    IntMatrix m = companion(p);
    WitnessSearch ws = z_reversor_search(m);
    REQUIRE(ws.verdict == SearchVerdict::found);
    CHECK(*ws.witness == reversal_involution(n));
    if (!(m * m).is_identity()) {
      ReversorOrderAnalysis a = reversor_order_analysis(m, *ws.witness);
      CHECK(a.semidirect_confirmed);
    }
    ++done;
  }
}

TEST_CASE("implication chain: z witness => Q-reversible => reciprocal and unimodular") {
  std::mt19937_64 rng(246);
  std::vector<IntMatrix> pool = {kM1, kM2, kWilson, kM8, kEightCat, companion(kSalem),
                                 IntMatrix::from_rows({{2, 1}, {1, 1}})};
  for (int i = 0; i < 10; ++i) pool.push_back(oracles::random_sl2(rng, 500));
  for (const IntMatrix& m : pool) {
    if (!is_unimodular(m)) continue;
    ReversibilityReport rep = analyze_reversibility(m, 3, false, 2);
    if (rep.z_search.witness) {
      CHECK(rep.q_reversible);
      IntMatrix g = *rep.z_search.witness;
      CHECK(g * m == inverse_unimodular(m) * g);
    }
    if (rep.q_reversible) {
      CHECK(rep.necessary.self_reciprocal);
      CHECK(rep.necessary.det_ok);
    }
  }
}

TEST_CASE("elementary symmetric coefficient identity equals the reciprocity test") {
  // S_k(lambda) = det(M) S_{n-k}(lambda) for all k, read off charpoly
  // coefficients: a_{n-k} = (-1)^n det a_k ... verified as coefficient
  // mirror against is_self_reciprocal on random small matrices
  std::mt19937_64 rng(135);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    IntMatrix m = oracles::random_matrix(rng, n, -3, 3);
    IntPolynomial p = charpoly(m);
    if (p.coeff(0) == 0) continue;
    Int d = det(m);
    if (d != 1 && d != -1) continue;
    // S_k = (-1)^k a_{n-k}; the identity S_k = det * S_{n-k} for all k
    bool sym_identity = true;
    for (int k = 0; k <= n; ++k) {
      Int sk = (k % 2 ? -1 : 1) * p.coeff(n - k);
      Int snk = ((n - k) % 2 ? -1 : 1) * p.coeff(k);
      if (sk != d * snk) sym_identity = false;
    }
    // matches the paper only when the sign convention lines up with
    // self-reciprocity of P
    CHECK(sym_identity == is_self_reciprocal(p));
  }
}
