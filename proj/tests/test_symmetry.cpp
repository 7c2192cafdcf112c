#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toralsym/invariants.hpp"
#include "toralsym/polyring.hpp"
#include "toralsym/symmetry.hpp"

using namespace toralsym;

namespace {

const IntMatrix kM1 = IntMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 1}});
const IntMatrix kM2 = IntMatrix::from_rows({{1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
const IntMatrix kM2prime = IntMatrix::from_rows({{0, 1, 0}, {1, -1, 1}, {1, 1, 0}});
const IntMatrix kCat4 =
    IntMatrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 2, 1}, {0, 1, 1, 2}});
const IntMatrix kM8 =
    IntMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}});
const IntMatrix kG8 =
    IntMatrix::from_rows({{1, 1, 0, -1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {-1, 0, 1, 1}});
const IntMatrix kM10 =
    IntMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}});
const IntMatrix kM12 =
    IntMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 1, 0}});

}  // namespace

TEST_CASE("commutant of the 4D cat map is a 4-parameter family containing 1 and M") {
  CommutantModule com = commutant_basis(kCat4);
  CHECK(com.rank() == 4);
  CHECK(com.contains_identity());
  CHECK(com.ring_closed());
  // directions of the general commuting matrix
  //   [[a, b, -c, -d], [b, a, -d, -c],
  //    [c, d, a+2c+d, b+c+2d], [d, c, b+c+2d, a+2c+d]]
  IntMatrix db = IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  IntMatrix dc = IntMatrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 2, 1}, {0, 1, 1, 2}});
  IntMatrix dd = IntMatrix::from_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 1, 2}, {1, 0, 2, 1}});
  CHECK(com.contains(IntMatrix::identity(4)));
  CHECK(com.contains(db));
  CHECK(com.contains(dc));
  CHECK(com.contains(dd));
  CHECK(dc == kCat4);  // the c-direction is M itself
  // conversely, the module is exactly that span
  IntMatrix span(4, 16);
  const IntMatrix dirs[] = {IntMatrix::identity(4), db, dc, dd};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 16; ++c) span.at(r, c) = dirs[r].entries()[c];
  CHECK(hermite_normal_form(span) == com.basis_hnf);
}

TEST_CASE("commutant of the identity is everything") {
  CommutantModule com = commutant_basis(IntMatrix::identity(2));
  CHECK(com.rank() == 4);
}

TEST_CASE("commutant of M1: rank 3 and box-scan equivalence") {
  CommutantModule com = commutant_basis(kM1);
  CHECK(com.rank() == 3);
  for (const auto& v : oracles::commutant_box_scan(kM1, 2)) {
    IntMatrix g(3, 3);
    g.entries() = v;
    CHECK(com.contains(g));
  }
}

TEST_CASE("random commutant combinations commute and the module is a ring") {
  std::mt19937_64 rng(17);
  for (const IntMatrix& m : {kM1, kCat4, kM8}) {
    CommutantModule com = commutant_basis(m);
    CHECK(com.contains_identity());
    CHECK(com.ring_closed());
    for (int iter = 0; iter < 10; ++iter) {
      std::vector<Int> c(com.rank());
      for (Int& x : c) x = static_cast<long>(rng() % 9) - 4;
      IntMatrix g = com.combine(c);
      CHECK(m * g == g * m);
    }
  }
}

TEST_CASE("matrix_order on the quasicrystal examples") {
  CHECK(matrix_order(kM8) == 8);
  CHECK(matrix_order(kM10) == 5);
  CHECK(matrix_order(kM12) == 12);
  CHECK(matrix_order(-IntMatrix::identity(3)) == 2);
  CHECK_FALSE(matrix_order(kM1).has_value());
  CHECK_FALSE(matrix_order(IntMatrix::from_rows({{1, 1}, {0, 1}})).has_value());  // parabolic
  CHECK_THROWS_AS(matrix_order(IntMatrix::from_rows({{2, 0}, {0, 1}})), unimodularity_error);
}

TEST_CASE("finite order implies cyclotomic characteristic polynomial") {
  for (const IntMatrix& m : {kM8, kM10, kM12}) {
    auto ord = matrix_order(m);
    REQUIRE(ord.has_value());
    auto [cyc, lcm_ord] = cyclotomic_profile(charpoly(m));
    CHECK(cyc);
    CHECK(*lcm_ord == *ord);
  }
}

TEST_CASE("torsion_search: odd-degree irreducible pins C2") {
  TorsionSearchResult ts = torsion_search(kM1, 2);
  CHECK(ts.complete);
  CHECK(ts.invariant_factors == std::vector<long>{2});
  REQUIRE(ts.generators.size() == 1);
  CHECK(ts.generators[0] == -IntMatrix::identity(3));
}

TEST_CASE("torsion_search: 8-fold case finds C8") {
  TorsionSearchResult ts = torsion_search(kM8, 2);
  CHECK(ts.complete);
  CHECK(ts.order == 8);
  CHECK(ts.invariant_factors == std::vector<long>{8});
  REQUIRE(ts.generators.size() == 1);
  CHECK(matrix_order(ts.generators[0]) == 8);
}

TEST_CASE("torsion_search: 4D cat map excludes roots and third-order elements") {
  TorsionSearchResult ts = torsion_search(kCat4, 2);
  CHECK(ts.complete);
  CHECK(ts.order == 4);
  CHECK(ts.invariant_factors == std::vector<long>{2, 2});
  CHECK_FALSE(ts.order3_found);
  CHECK_FALSE(ts.sqrt_of_m_found);
}

TEST_CASE("centralizer_structure on the worked examples") {
  GroupStructure s1 = centralizer_structure(kM1);
  CHECK(s1.structure_known);
  CHECK(s1.torsion == std::vector<long>{2});
  CHECK(s1.rank == 1);
  CHECK(s1.torsion_complete);

  GroupStructure s2 = centralizer_structure(kM2);
  CHECK(s2.torsion == std::vector<long>{2});
  CHECK(s2.rank == 2);

  GroupStructure s4 = centralizer_structure(kCat4);
  CHECK(s4.torsion == std::vector<long>{2, 2});
  CHECK(s4.rank == 1);

  GroupStructure s8 = centralizer_structure(kM8);
  CHECK(s8.torsion == std::vector<long>{8});
  CHECK(s8.rank == 1);

  GroupStructure salem = centralizer_structure(companion(IntPolynomial{1, -2, -2, -2, 1}));
  CHECK(salem.torsion == std::vector<long>{2});
  CHECK(salem.rank == 2);

  CHECK_THROWS_AS(centralizer_structure(IntMatrix::from_rows({{2, 0}, {0, 1}})),
                  unimodularity_error);
}

TEST_CASE("centralizer_structure declines non-simple input") {
  GroupStructure s = centralizer_structure(IntMatrix::identity(3));
  CHECK_FALSE(s.structure_known);
  CHECK(s.commutant_rank == 9);
}

TEST_CASE("centralizer rank is conjugation invariant") {
  std::mt19937_64 rng(23);
  for (const IntMatrix& m : {kM1, kCat4}) {
    GroupStructure base = centralizer_structure(m);
    for (int iter = 0; iter < 3; ++iter) {
      IntMatrix b = oracles::random_unimodular(rng, m.dim(), 8);
      GroupStructure conj = centralizer_structure(b * m * inverse_unimodular(b));
      CHECK(conj.rank == base.rank);
      CHECK(conj.torsion == base.torsion);
    }
  }
}

TEST_CASE("verify_symmetry and ksym_index") {
  CHECK(verify_symmetry(kM2, kM2prime));
  CHECK(verify_symmetry(kM8, kG8));
  CHECK(ksym_index(kCat4, IntMatrix::identity(4), 5) == 1);
  IntMatrix cat = IntMatrix::from_rows({{2, 1}, {1, 1}});
  IntMatrix rot = IntMatrix::from_rows({{0, -1}, {1, 0}});
  CHECK_FALSE(ksym_index(cat, rot, 12).has_value());
}

TEST_CASE("verify_generator_set on the quasicrystal and cubic examples") {
  GeneratorSetReport r8 = verify_generator_set(kM8, {kM8, kG8});
  CHECK(r8.consistent);
  CHECK(r8.structure == "C8 x Z");

  GeneratorSetReport r2 =
      verify_generator_set(kM2, {-IntMatrix::identity(3), kM2, kM2prime});
  CHECK(r2.consistent);
  CHECK(r2.structure == "C2 x Z^2");

  GeneratorSetReport triv = verify_generator_set(kCat4, {IntMatrix::identity(4)});
  CHECK(triv.consistent);
  CHECK(triv.structure == "trivial");

  IntMatrix rot = IntMatrix::from_rows({{0, -1}, {1, 0}});
  CHECK_THROWS_AS(verify_generator_set(IntMatrix::from_rows({{2, 1}, {1, 1}}), {rot}),
                  std::invalid_argument);
  // dependent set: M and M^2 fail the bounded independence check
  GeneratorSetReport dep = verify_generator_set(kM1, {kM1, kM1 * kM1});
  CHECK_FALSE(dep.independent);
  CHECK_FALSE(dep.consistent);
}

TEST_CASE("admissible finite orders in low dimensions") {
  CHECK(admissible_finite_orders(2) == std::vector<long>{1, 2, 3, 4, 6});
  CHECK(admissible_finite_orders(4) ==
        std::vector<long>{1, 2, 3, 4, 5, 6, 8, 10, 12});
}
