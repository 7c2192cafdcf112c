#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toralsym/polyring.hpp"

using namespace toralsym;

namespace {

// small irreducible pool for randomized factorization round-trips
const std::vector<IntPolynomial> kIrreduciblePool = {
    IntPolynomial{-1, -1, 1},       // x^2 - x - 1
    IntPolynomial{-1, 1, 1},        // x^2 + x - 1
    IntPolynomial{1, -3, 1},        // x^2 - 3x + 1
    IntPolynomial{1, -1, 1},        // x^2 - x + 1
    IntPolynomial{1, 0, 0, 0, 1},   // x^4 + 1
    IntPolynomial{-1, 0, -1, 1},    // x^3 - x^2 - 1
    IntPolynomial{-1, 1},           // x - 1
    IntPolynomial{1, 1},            // x + 1
    IntPolynomial{3, -1, 1},        // x^2 - x + 3
};

IntPolynomial definitional_reciprocal(const IntPolynomial& p) {
  // (1/a0) x^n p(1/x): reversed coefficients scaled by a0 = +-1
  int n = p.degree();
  std::vector<Int> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = p.coeff(0) * p.coeff(n - k);
  return IntPolynomial::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic worked examples") {
  CHECK(poly_gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}) == IntPolynomial{-1, 1});
  auto [q, r] = poly_divmod(IntPolynomial{1, -1, -2, 1}, IntPolynomial{-1, 1});
  CHECK(q == IntPolynomial{-2, -1, 1});
  CHECK(r == IntPolynomial{-1});
  CHECK(IntPolynomial{1, -3, 1} * IntPolynomial{1, -1, 1} == IntPolynomial{1, -4, 5, -4, 1});
  CHECK_THROWS_AS(poly_divmod(IntPolynomial{1, 1}, IntPolynomial()), std::domain_error);
}

TEST_CASE("poly_gcd of monic inputs with monic gcd is monic") {
  IntPolynomial a = IntPolynomial{-1, -1, 1} * IntPolynomial{1, -3, 1};
  IntPolynomial b = IntPolynomial{-1, -1, 1} * IntPolynomial{1, -1, 1};
  CHECK(poly_gcd(a, b) == IntPolynomial{-1, -1, 1});
}

TEST_CASE("factor_over_Z paper examples") {
  SUBCASE("4D cat map polynomial") {
    Factorization f = factor_over_Z(IntPolynomial{1, -4, 5, -4, 1});
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == IntPolynomial{1, -3, 1});
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == IntPolynomial{1, -1, 1});
    CHECK(f.factors[1].second == 1);
  }
  SUBCASE("x^4 + 1 irreducible") {
    Factorization f = factor_over_Z(IntPolynomial{1, 0, 0, 0, 1});
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[0].first.degree() == 4);
    CHECK(is_irreducible_over_Z(IntPolynomial{1, 0, 0, 0, 1}));
  }
  SUBCASE("(x^2-x-1)(x^2+x-1)^2 with multiplicities") {
    IntPolynomial p = IntPolynomial{-1, -1, 1} * poly_pow(IntPolynomial{-1, 1, 1}, 2);
    Factorization f = factor_over_Z(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == IntPolynomial{-1, -1, 1});
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == IntPolynomial{-1, 1, 1});
    CHECK(f.factors[1].second == 2);
  }
}

TEST_CASE("factor_over_Z round-trips on random products of small irreducibles") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    IntPolynomial p{1};
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      const IntPolynomial& f = kIrreduciblePool[rng() % kIrreduciblePool.size()];
      int mult = 1 + static_cast<int>(rng() % 2);
      p = p * poly_pow(f, mult);
    }
    Factorization fac = factor_over_Z(p);
    CHECK(fac.product() == p);
    for (const auto& [f, m] : fac.factors) {
      CHECK(m >= 1);
      CHECK(f.is_monic());
    }
    for (size_t i = 0; i + 1 < fac.factors.size(); ++i)
      CHECK(IntPolynomial::compare(fac.factors[i].first, fac.factors[i + 1].first) < 0);
  }
}

TEST_CASE("squarefree decomposition") {
  IntPolynomial p = poly_pow(IntPolynomial{-1, 1}, 3) * IntPolynomial{1, 1};
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::pair{IntPolynomial{1, 1}, 1});
  CHECK(parts[1] == std::pair{IntPolynomial{-1, 1}, 3});
}

TEST_CASE("is_self_reciprocal examples") {
  CHECK(is_self_reciprocal(IntPolynomial{1, -2, -2, -2, 1}));
  CHECK_FALSE(is_self_reciprocal(IntPolynomial{-1, -1, 1}));
  CHECK_FALSE(is_self_reciprocal(IntPolynomial{-1, 0, -1, 1}));
  CHECK_THROWS_AS(is_self_reciprocal(IntPolynomial{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_self_reciprocal(IntPolynomial{1, 2}), std::invalid_argument);
}

TEST_CASE("is_self_reciprocal agrees with the definitional predicate") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Int> c(n + 1);
    c[n] = 1;
    c[0] = (rng() % 2) ? 1 : -1;
    for (int k = 1; k < n; ++k) c[k] = static_cast<long>(rng() % 7) - 3;
    IntPolynomial p = IntPolynomial::from_coeffs(std::move(c));
    CHECK(is_self_reciprocal(p) == (definitional_reciprocal(p) == p));
  }
}

TEST_CASE("odd-degree self-reciprocal polynomials vanish at 1 or -1") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    int half = 1 + static_cast<int>(rng() % 3);
    int n = 2 * half + 1;
    std::vector<Int> c(n + 1);
    c[n] = 1;
    Int a0 = (rng() % 2) ? 1 : -1;
    c[0] = a0;
    for (int k = 1; k <= half; ++k) {
      c[k] = static_cast<long>(rng() % 9) - 4;
      c[n - k] = a0 * c[k];
    }
    IntPolynomial p = IntPolynomial::from_coeffs(std::move(c));
    REQUIRE(is_self_reciprocal(p));
    CHECK((p(Int(1)) == 0 || p(Int(-1)) == 0));
  }
}

TEST_CASE("real_root_count paper examples") {
  RootSignature s = real_root_count(IntPolynomial{1, -3, 1});
  CHECK(s.n1 == 2);
  CHECK(s.n2 == 0);
  s = real_root_count(IntPolynomial{1, -1, 1});
  CHECK(s.n1 == 0);
  CHECK(s.n2 == 1);
  s = real_root_count(IntPolynomial{-1, 0, -1, 1});
  CHECK(s.n1 == 1);
  CHECK(s.n2 == 1);
  CHECK_THROWS_AS(real_root_count(poly_pow(IntPolynomial{-1, 1}, 2)), std::invalid_argument);
}

TEST_CASE("real_root_count agrees with bisection isolation up to degree 6") {
  std::vector<IntPolynomial> fixed = {
      IntPolynomial{1, -2, -2, -2, 1},  // Salem quartic: 2 real
      IntPolynomial{1, 0, 0, 0, 1},     // x^4+1: none
      IntPolynomial{-1, -1, 1},
      IntPolynomial{-2, 0, 1},          // x^2-2
      IntPolynomial{-1, 0, 0, 0, 0, 0, 1},  // x^6-1
      IntPolynomial{1, -3, 0, 1},  // x^3-3x+1: three real roots
  };
  for (const IntPolynomial& p : fixed) {
    RootSignature s = real_root_count(p);
    CHECK(s.n1 == oracles::count_real_roots_bisection(p));
    CHECK(s.n1 + 2 * s.n2 == p.degree());
  }
  std::mt19937_64 rng(555);
  int done = 0;
  while (done < 60) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Int> c(n + 1);
    c[n] = 1;
    for (int k = 0; k < n; ++k) c[k] = static_cast<long>(rng() % 11) - 5;
    IntPolynomial p = IntPolynomial::from_coeffs(std::move(c));
    if (!poly_is_squarefree(p) || p.coeff(0) == 0) continue;
    RootSignature s = real_root_count(p);
    CAPTURE(p.to_string());
    CHECK(s.n1 == oracles::count_real_roots_bisection(p));
    ++done;
  }
}

TEST_CASE("cyclotomic_profile") {
  auto [c8, o8] = cyclotomic_profile(IntPolynomial{1, 0, 0, 0, 1});
  CHECK(c8);
  CHECK(o8 == 8);
  auto [c5, o5] = cyclotomic_profile(IntPolynomial{1, 1, 1, 1, 1});
  CHECK(c5);
  CHECK(o5 == 5);
  auto [cn, on] = cyclotomic_profile(IntPolynomial{1, -3, 1});
  CHECK_FALSE(cn);
  CHECK_FALSE(on.has_value());
  // 12-fold column of Table 1
  auto [c12, o12] = cyclotomic_profile(IntPolynomial{1, 0, -1, 0, 1});
  CHECK(c12);
  CHECK(o12 == 12);
  // composite: (x-1)(x+1)(x^2+1) = x^4 - 1 has orders lcm(1,2,4) = 4
  auto [c4, o4] = cyclotomic_profile(IntPolynomial{-1, 0, 0, 0, 1});
  CHECK(c4);
  CHECK(o4 == 4);
}

TEST_CASE("cyclotomic generation sanity") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic(8) == IntPolynomial{1, 0, 0, 0, 1});
  CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  // prod over d | m of Phi_d = x^m - 1
  for (int m : {6, 10, 12}) {
    IntPolynomial prod{1};
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * cyclotomic(d);
    std::vector<Int> c(m + 1, Int(0));
    c[0] = -1;
    c[m] = 1;
    CHECK(prod == IntPolynomial::from_coeffs(std::move(c)));
  }
}
