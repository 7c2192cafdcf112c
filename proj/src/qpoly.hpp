#pragma once

// Internal: univariate polynomials over Q, used by the Frobenius-form
// construction (Smith reduction of x*1 - M over Q[x]) and the idempotent
// lifting in the symmetry module.

#include <utility>
#include <vector>

#include "toralsym/polynomial.hpp"

namespace toralsym::qpoly {

using QPoly = std::vector<Rat>;  // ascending, trimmed

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly from_int(const IntPolynomial& p) {
  QPoly q(p.coeffs().size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = p.coeffs()[i];
  return q;
}

inline bool is_integral(const QPoly& p) {
  for (const Rat& c : p)
    if (c.get_den() != 1) return false;
  return true;
}

inline IntPolynomial to_int(const QPoly& p) {
  std::vector<Int> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1) throw std::logic_error("qpoly::to_int: non-integral coefficient");
    c[i] = p[i].get_num();
  }
  return IntPolynomial::from_coeffs(std::move(c));
}

inline QPoly add(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  trim(c);
  return c;
}

inline QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

inline QPoly scale(const QPoly& a, const Rat& s) {
  QPoly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  trim(c);
  return c;
}

inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("qpoly: division by zero");
  QPoly r = a;
  if (deg(a) < deg(b)) return {{}, r};
  QPoly q(deg(a) - deg(b) + 1);
  Rat linv = 1 / b.back();
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    size_t lead = k + b.size() - 1;
    if (lead >= r.size() || r[lead] == 0) continue;
    Rat c = r[lead] * linv;
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline QPoly make_monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// s*a + t*b = g (monic gcd).
inline void xgcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = {Rat(1)}, s1 = {};
  QPoly t0 = {}, t1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    g = s = t = {};
    return;
  }
  Rat linv = 1 / r0.back();
  g = scale(r0, linv);
  s = scale(s0, linv);
  t = scale(t0, linv);
}

}  // namespace toralsym::qpoly
