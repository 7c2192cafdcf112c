#include "toralsym/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace toralsym {

IntPolynomial Factorization::product() const {
  IntPolynomial r = IntPolynomial::constant(content);
  for (const auto& [f, m] : factors) r = r * poly_pow(f, m);
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z/m)[x]. Coefficient representatives live in [0, m).
// ---------------------------------------------------------------------------

namespace zp {

using Poly = std::vector<Int>;  // ascending, trimmed

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly reduce(const IntPolynomial& p, const Int& m) {
  Poly r(p.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = mod(p.coeffs()[i], m);
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Int& m) {
  Poly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = mod(c[i] + b[i], m);
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b, const Int& m) {
  Poly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = mod(c[i] - b[i], m);
  trim(c);
  return c;
}

Poly mul(const Poly& a, const Poly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (Int& x : c) x = mod(x, m);
  trim(c);
  return c;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::logic_error("zp: non-invertible leading coefficient");
  return r;
}

// divisor must have invertible leading coefficient (monic in all our uses)
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Int& m) {
  if (b.empty()) throw std::domain_error("zp: division by zero");
  Poly r = a;
  if (deg(a) < deg(b)) return {{}, r};
  Poly q(deg(a) - deg(b) + 1, Int(0));
  Int linv = inv_mod(b.back(), m);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    size_t lead = k + b.size() - 1;
    if (lead >= r.size() || r[lead] == 0) continue;
    Int c = mod(r[lead] * linv, m);
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] = mod(r[k + j] - c * b[j], m);
  }
  trim(r);
  trim(q);
  return {q, r};
}

Poly make_monic(const Poly& a, const Int& m) {
  if (a.empty()) return a;
  Int linv = inv_mod(a.back(), m);
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] * linv, m);
  return r;
}

Poly gcd(Poly a, Poly b, const Int& m) {
  while (!b.empty()) {
    Poly r = divmod(a, b, m).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(a, m);
}

// extended euclid: s*a + t*b = 1 (a, b coprime mod prime m)
void xgcd_coprime(const Poly& a, const Poly& b, const Int& m, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0 = {Int(1)}, s1 = {};
  Poly t0 = {}, t1 = {Int(1)};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1, m);
    Poly s2 = sub(s0, mul(q, s1, m), m);
    Poly t2 = sub(t0, mul(q, t1, m), m);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::logic_error("zp: xgcd on non-coprime polynomials");
  Int linv = inv_mod(r0[0], m);
  s.clear();
  t.clear();
  for (const Int& c : s0) s.push_back(mod(c * linv, m));
  for (const Int& c : t0) t.push_back(mod(c * linv, m));
  trim(s);
  trim(t);
}

Poly pow_mod(const Poly& base, const Int& e, const Poly& f, const Int& m) {
  Poly r = {Int(1)};
  Poly b = divmod(base, f, m).second;
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = divmod(mul(r, r, m), f, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(mul(r, b, m), f, m).second;
  }
  return r;
}

IntPolynomial to_int_poly_symmetric(const Poly& p, const Int& m) {
  std::vector<Int> c(p.size());
  Int half = m / 2;
  for (size_t i = 0; i < p.size(); ++i) c[i] = p[i] > half ? Int(p[i] - m) : p[i];
  return IntPolynomial::from_coeffs(std::move(c));
}

}  // namespace zp

// ---------------------------------------------------------------------------
// Factorization over F_p: distinct-degree + Cantor-Zassenhaus equal-degree
// splitting (p odd). The RNG is fixed-seeded; the output is canonicalized
// later anyway.
// ---------------------------------------------------------------------------

namespace {

void equal_degree_split(const zp::Poly& f, int d, const Int& p, std::mt19937_64& rng,
                        std::vector<zp::Poly>& out) {
  if (zp::deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int exponent = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    zp::Poly a(zp::deg(f));
    for (auto& c : a) c = zp::mod(Int(static_cast<unsigned long>(rng())), p);
    zp::trim(a);
    if (a.empty() || zp::deg(a) < 1) continue;
    zp::Poly g = zp::gcd(a, f, p);
    if (zp::deg(g) > 0 && zp::deg(g) < zp::deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(zp::divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    zp::Poly b = zp::pow_mod(a, exponent, f, p);
    b = zp::sub(b, {Int(1)}, p);
    g = zp::gcd(b, f, p);
    if (zp::deg(g) > 0 && zp::deg(g) < zp::deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(zp::divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<zp::Poly> factor_mod_p(const zp::Poly& f_in, const Int& p) {
  std::vector<zp::Poly> out;
  zp::Poly f = zp::make_monic(f_in, p);
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<unsigned long>(zp::deg(f)));
  zp::Poly x = {Int(0), Int(1)};
  zp::Poly h = x;
  int d = 0;
  while (zp::deg(f) > 0 && 2 * (d + 1) <= zp::deg(f)) {
    ++d;
    h = zp::pow_mod(h, p, f, p);
    zp::Poly g = zp::gcd(zp::sub(h, x, p), f, p);
    if (zp::deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = zp::divmod(f, g, p).first;
      h = zp::divmod(h, f, p).second;
    }
  }
  if (zp::deg(f) > 0) out.push_back(f);
  return out;
}

// quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m);
// returns the same data mod m^2 (von zur Gathen & Gerhard, Alg. 15.10)
struct HenselPair {
  zp::Poly g, h, s, t;
};

HenselPair hensel_step(const IntPolynomial& f, const HenselPair& in, const Int& m) {
  Int m2 = m * m;
  auto red = [&](const zp::Poly& p) {
    zp::Poly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = zp::mod(p[i], m2);
    zp::trim(r);
    return r;
  };
  zp::Poly g = red(in.g), h = red(in.h), s = red(in.s), t = red(in.t);
  zp::Poly fm = zp::reduce(f, m2);
  zp::Poly e = zp::sub(fm, zp::mul(g, h, m2), m2);
  auto [q, r] = zp::divmod(zp::mul(s, e, m2), h, m2);
  zp::Poly gstar = zp::add(zp::add(g, zp::mul(t, e, m2), m2), zp::mul(q, g, m2), m2);
  zp::Poly hstar = zp::add(h, r, m2);
  zp::Poly b = zp::sub(zp::add(zp::mul(s, gstar, m2), zp::mul(t, hstar, m2), m2), {Int(1)}, m2);
  auto [c, d] = zp::divmod(zp::mul(s, b, m2), hstar, m2);
  zp::Poly sstar = zp::sub(s, d, m2);
  zp::Poly tstar = zp::sub(zp::sub(t, zp::mul(t, b, m2), m2), zp::mul(c, gstar, m2), m2);
  return {gstar, hstar, sstar, tstar};
}

// lift f = prod(list) (mod p) to mod p^e, f monic; returns factors mod p^e
std::vector<zp::Poly> hensel_lift_list(const IntPolynomial& f, const std::vector<zp::Poly>& list,
                                       const Int& p, const Int& target) {
  if (list.size() == 1) return {zp::reduce(f, target)};
  size_t half = list.size() / 2;
  std::vector<zp::Poly> a(list.begin(), list.begin() + half);
  std::vector<zp::Poly> b(list.begin() + half, list.end());
  zp::Poly g = {Int(1)}, h = {Int(1)};
  for (const auto& fi : a) g = zp::mul(g, fi, p);
  for (const auto& fi : b) h = zp::mul(h, fi, p);
  HenselPair pair;
  pair.g = g;
  pair.h = h;
  zp::xgcd_coprime(g, h, p, pair.s, pair.t);
  Int m = p;
  while (m < target) {
    pair = hensel_step(f, pair, m);
    m = m * m;
  }
  IntPolynomial gz = zp::to_int_poly_symmetric(
      [&] {
        zp::Poly r(pair.g.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = zp::mod(pair.g[i], target);
        zp::trim(r);
        return r;
      }(),
      target);
  IntPolynomial hz = zp::to_int_poly_symmetric(
      [&] {
        zp::Poly r(pair.h.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = zp::mod(pair.h[i], target);
        zp::trim(r);
        return r;
      }(),
      target);
  std::vector<zp::Poly> left = hensel_lift_list(gz, a, p, target);
  std::vector<zp::Poly> right = hensel_lift_list(hz, b, p, target);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

Int norm2_ceil(const IntPolynomial& f) {
  Int s = 0;
  for (const Int& c : f.coeffs()) s += c * c;
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

bool is_prime_small(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// irreducible factors of a monic square-free polynomial (Zassenhaus)
std::vector<IntPolynomial> zassenhaus_monic_squarefree(const IntPolynomial& f) {
  int n = f.degree();
  if (n <= 1) return {f};
  // prime with square-free reduction
  Int p = 0;
  std::vector<zp::Poly> modular;
  for (long cand = 3;; cand += 2) {
    if (!is_prime_small(cand)) continue;
    Int pc(cand);
    if (zp::mod(f.leading(), pc) == 0) continue;
    zp::Poly fp = zp::reduce(f, pc);
    if (zp::deg(fp) != n) continue;
    zp::Poly d(fp.size() - 1);
    for (size_t i = 1; i < fp.size(); ++i) d[i - 1] = zp::mod(fp[i] * Int(static_cast<long>(i)), pc);
    zp::trim(d);
    if (zp::deg(zp::gcd(fp, d, pc)) != 0) continue;
    p = pc;
    modular = factor_mod_p(fp, p);
    break;
  }
  if (modular.size() == 1) return {f};
  std::sort(modular.begin(), modular.end(), [](const zp::Poly& a, const zp::Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  // lift past twice the Mignotte-style factor bound
  Int bound = (Int(1) << (n + 1)) * norm2_ceil(f);
  Int target = p;
  while (target <= 2 * bound) target *= p;
  std::vector<zp::Poly> lifted = hensel_lift_list(f, modular, p, target);

  std::vector<IntPolynomial> out;
  IntPolynomial rest = f;
  std::vector<bool> used(lifted.size(), false);
  size_t remaining = lifted.size();
  for (size_t s = 1; s <= remaining / 2;) {
    // subsets of size s over unused indices, lexicographic
    std::vector<size_t> avail;
    for (size_t i = 0; i < lifted.size(); ++i)
      if (!used[i]) avail.push_back(i);
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      zp::Poly prod = {Int(1)};
      for (size_t i = 0; i < s; ++i) prod = zp::mul(prod, lifted[avail[idx[i]]], target);
      IntPolynomial cand = zp::to_int_poly_symmetric(prod, target);
      if (poly_divides(cand, rest)) {
        out.push_back(cand);
        rest = poly_exact_div(rest, cand);
        for (size_t i = 0; i < s; ++i) used[avail[idx[i]]] = true;
        remaining -= s;
        found = true;
        break;
      }
      // next subset
      size_t i = s;
      while (i-- > 0) {
        if (idx[i] + (s - i) < avail.size()) {
          ++idx[i];
          for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// non-monic f: factor the associated monic polynomial L^(d-1) f(x/L)
std::vector<IntPolynomial> factor_primitive_squarefree(const IntPolynomial& f) {
  if (f.is_monic()) return zassenhaus_monic_squarefree(f);
  int d = f.degree();
  const Int& lead = f.leading();
  // associated monic polynomial L^{d-1} f(x/L)
  std::vector<Int> t(d + 1);
  t[d] = 1;
  for (int k = 0; k < d; ++k)
    t[k] = f.coeff(k) * pow_int(lead, static_cast<unsigned long>(d - 1 - k));
  IntPolynomial monic = IntPolynomial::from_coeffs(std::move(t));
  std::vector<IntPolynomial> mf = zassenhaus_monic_squarefree(monic);
  std::vector<IntPolynomial> out;
  for (const IntPolynomial& g : mf) {
    std::vector<Int> c(g.degree() + 1);
    for (int k = 0; k <= g.degree(); ++k) c[k] = g.coeff(k) * pow_int(lead, static_cast<unsigned long>(k));
    out.push_back(IntPolynomial::from_coeffs(std::move(c)).primitive());
  }
  return out;
}

}  // namespace

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  IntPolynomial f = p.primitive();
  std::vector<std::pair<IntPolynomial, int>> out;
  if (f.degree() == 0) return out;
  IntPolynomial g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPolynomial w = poly_exact_div(f, g);
  IntPolynomial y = poly_exact_div(f.derivative(), g);
  IntPolynomial z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    IntPolynomial h = poly_gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = poly_exact_div(w, h);
    y = poly_exact_div(z, h);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

Factorization factor_over_Z(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_over_Z: zero polynomial");
  Factorization fac;
  Int content = p.content();
  if (sgn(p.leading()) < 0) content = -content;
  fac.content = content;
  IntPolynomial f = p.primitive();
  if (f.degree() == 0) return fac;
  // powers of x
  int val = 0;
  while (f.coeff(0) == 0) {
    f = poly_exact_div(f, IntPolynomial{0, 1});
    ++val;
  }
  if (val > 0) fac.factors.emplace_back(IntPolynomial{0, 1}, val);
  for (const auto& [sqf, mult] : squarefree_decomposition(f)) {
    for (const IntPolynomial& irr : factor_primitive_squarefree(sqf))
      fac.factors.emplace_back(irr, mult);
  }
  std::sort(fac.factors.begin(), fac.factors.end(), [](const auto& a, const auto& b) {
    return IntPolynomial::compare(a.first, b.first) < 0;
  });
  return fac;
}

bool is_irreducible_over_Z(const IntPolynomial& p) {
  if (p.degree() < 1) return false;
  Factorization f = factor_over_Z(p);
  return f.factors.size() == 1 && f.factors[0].second == 1 &&
         f.factors[0].first.degree() == p.degree();
}

bool is_self_reciprocal(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("is_self_reciprocal: monic input required");
  int n = p.degree();
  const Int& a0 = p.coeff(0);
  if (a0 == 0) throw std::invalid_argument("is_self_reciprocal: constant term is zero");
  if (a0 != 1 && a0 != -1) return false;
  for (int k = 0; k <= n; ++k)
    if (p.coeff(n - k) != a0 * p.coeff(k)) return false;
  return true;
}

IntPolynomial reciprocal_partner(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("reciprocal_partner: monic input required");
  int n = p.degree();
  const Int& a0 = p.coeff(0);
  if (a0 != 1 && a0 != -1)
    throw std::invalid_argument("reciprocal_partner: constant term must be +-1");
  std::vector<Int> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a0 * p.coeff(n - k);
  return IntPolynomial::from_coeffs(std::move(c));
}

namespace {

int sign_at_plus_inf(const IntPolynomial& p) { return sgn(p.leading()); }
int sign_at_minus_inf(const IntPolynomial& p) {
  int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

}  // namespace

RootSignature real_root_count(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("real_root_count: degree >= 1 required");
  if (!poly_is_squarefree(p)) throw std::invalid_argument("real_root_count: square-free input required");
  // Sturm chain with primitive reduction; pseudo-remainders are rescaled so
  // every stored polynomial keeps the sign of the exact rational remainder.
  std::vector<IntPolynomial> chain;
  chain.push_back(p.primitive_signed());
  chain.push_back(p.derivative().primitive_signed());
  while (chain.back().degree() > 0) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    int delta = a.degree() - b.degree();
    IntPolynomial r = poly_pseudo_rem(a, b);
    if (r.is_zero()) throw std::invalid_argument("real_root_count: square-free input required");
    int mult_sign = (sgn(b.leading()) < 0 && (delta + 1) % 2 == 1) ? -1 : 1;
    IntPolynomial next = (mult_sign < 0 ? r : -r).primitive_signed();
    chain.push_back(next);
  }
  auto variations = [&](auto sign_of) {
    int v = 0, prev = 0;
    for (const IntPolynomial& q : chain) {
      int s = sign_of(q);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  int n1 = variations(sign_at_minus_inf) - variations(sign_at_plus_inf);
  RootSignature sig;
  sig.n1 = n1;
  sig.n2 = (p.degree() - n1) / 2;
  return sig;
}

int euler_phi(int m) {
  int r = m;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      r -= r / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

IntPolynomial cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m >= 1 required");
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed ascending
  std::vector<int> divs;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  std::vector<IntPolynomial> phi;
  for (size_t di = 0; di < divs.size(); ++di) {
    int d = divs[di];
    std::vector<Int> c(d + 1, Int(0));
    c[0] = -1;
    c[d] = 1;
    IntPolynomial num = IntPolynomial::from_coeffs(std::move(c));
    for (size_t i = 0; i < di; ++i)
      if (d % divs[i] == 0) num = poly_exact_div(num, phi[i]);
    phi.push_back(num);
  }
  return phi.back();
}

std::vector<int> cyclotomic_orders_up_to_degree(int d) {
  std::vector<int> out;
  // phi(m) >= sqrt(m/2), so m <= 2 d^2 + 1 bounds the scan
  for (int m = 1; m <= 2 * d * d + 1; ++m)
    if (euler_phi(m) <= d) out.push_back(m);
  return out;
}

std::pair<bool, std::optional<long>> cyclotomic_profile(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("cyclotomic_profile: monic input required");
  IntPolynomial rem = p;
  long order = 1;
  for (int m : cyclotomic_orders_up_to_degree(p.degree())) {
    if (rem.degree() < 1) break;
    IntPolynomial phi = cyclotomic(m);
    while (phi.degree() <= rem.degree() && poly_divides(phi, rem)) {
      rem = poly_exact_div(rem, phi);
      order = std::lcm(order, static_cast<long>(m));
    }
  }
  if (rem.degree() == 0 && rem.coeff(0) == 1)
    return {true, order};
  return {false, std::nullopt};
}

}  // namespace toralsym
