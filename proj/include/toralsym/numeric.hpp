#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace toralsym {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with positive denominator, which is exactly the canonical
// form required throughout.
using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division (round toward -infinity), used by Hermite reduction.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Exact division; throws if b does not divide a. All fraction-free
// eliminations rely on this as a correctness tripwire.
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: inexact integer division");
  return q;
}

inline Int pow_int(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline bool fits_long(const Int& a) { return a.fits_slong_p(); }

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unimodularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

// det(M^k - 1) = 0: the fixed-point count is infinite for this power.
struct degenerate_orbit_error : std::domain_error {
  int k;
  explicit degenerate_orbit_error(int k_)
      : std::domain_error("eigenvalue 1 of M^" + std::to_string(k_) +
                          ": fixed-point set is infinite"),
        k(k_) {}
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace toralsym
