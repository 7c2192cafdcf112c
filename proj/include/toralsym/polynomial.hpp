#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "toralsym/numeric.hpp"

namespace toralsym {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored ascending (coeff(0) is the constant term). Trailing zeros are
/// trimmed, so degree() is the honest degree (-1 for the zero polynomial).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> ascending);
  static IntPolynomial from_coeffs(std::vector<Int> ascending);
  static IntPolynomial constant(Int c);
  static IntPolynomial x_power(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^k; zero beyond the degree.
  const Int& coeff(int k) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  bool operator==(const IntPolynomial&) const = default;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator*(const Int& c) const;

  Int operator()(const Int& x) const;
  Rat operator()(const Rat& x) const;

  IntPolynomial derivative() const;

  /// gcd of all coefficients (0 for the zero polynomial).
  Int content() const;
  /// content-free part with positive leading coefficient.
  IntPolynomial primitive() const;
  /// content-free part keeping the sign of the leading coefficient.
  IntPolynomial primitive_signed() const;

  /// Deterministic total order: by degree, then coefficients from the
  /// leading one down.
  static int compare(const IntPolynomial& a, const IntPolynomial& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Int> c_;
  void trim();
};

/// Long division in Z[x]; every coefficient step must divide exactly
/// (always the case for divisors with unit leading coefficient), otherwise
/// std::domain_error. q = 0 is rejected.
std::pair<IntPolynomial, IntPolynomial> poly_divmod(const IntPolynomial& p, const IntPolynomial& q);

/// Exact quotient; throws if q does not divide p.
IntPolynomial poly_exact_div(const IntPolynomial& p, const IntPolynomial& q);

bool poly_divides(const IntPolynomial& q, const IntPolynomial& p);

/// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q, fraction-free.
IntPolynomial poly_pseudo_rem(const IntPolynomial& p, const IntPolynomial& q);

/// Primitive gcd with positive leading coefficient (primitive PRS with
/// content reduction between steps).
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

bool poly_is_squarefree(const IntPolynomial& p);

IntPolynomial poly_pow(const IntPolynomial& p, int e);

}  // namespace toralsym
