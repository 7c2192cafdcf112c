#include "toralsym/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace toralsym {

namespace {
const Int kZero = 0;
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<Int> ascending) {
  IntPolynomial p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::x_power(int k) {
  IntPolynomial p;
  p.c_.assign(k + 1, Int(0));
  p.c_.back() = 1;
  return p;
}

const Int& IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Int& IntPolynomial::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p = *this;
  for (Int& x : p.c_) x = -x;
  return p;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  Int t;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      t = a.c_[i] * b.c_[j];
      c[i + j] += t;
    }
  }
  return IntPolynomial::from_coeffs(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
  if (k == 0) return IntPolynomial();
  IntPolynomial p = *this;
  for (Int& x : p.c_) x *= k;
  return p;
}

Int IntPolynomial::operator()(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

Rat IntPolynomial::operator()(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<Int> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(static_cast<long>(i));
  return from_coeffs(std::move(d));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const Int& x : c_) g = toralsym::gcd(g, x);
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return *this;
  Int g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPolynomial p = *this;
  for (Int& x : p.c_) x = exact_div(x, g);
  return p;
}

IntPolynomial IntPolynomial::primitive_signed() const {
  if (is_zero()) return *this;
  Int g = content();
  IntPolynomial p = *this;
  for (Int& x : p.c_) x = exact_div(x, g);
  return p;
}

int IntPolynomial::compare(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    int c = cmp(a.coeff(k), b.coeff(k));
    if (c != 0) return c;
  }
  return 0;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& a = coeff(k);
    if (a == 0) continue;
    Int m = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    bool show_coeff = (m != 1) || k == 0;
    if (show_coeff) os << m.get_str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<IntPolynomial, IntPolynomial> poly_divmod(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < q.degree()) return {IntPolynomial(), p};
  std::vector<Int> rem(p.coeffs());
  std::vector<Int> quo(p.degree() - q.degree() + 1, Int(0));
  const Int& lq = q.leading();
  for (int k = p.degree() - q.degree(); k >= 0; --k) {
    Int& lead = rem[k + q.degree()];
    if (lead == 0) continue;
    Int c, r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), lq.get_mpz_t());
    if (r != 0)
      throw std::domain_error("polynomial division step not exact over Z");
    quo[k] = c;
    for (int j = 0; j <= q.degree(); ++j) rem[k + j] -= c * q.coeff(j);
  }
  return {IntPolynomial::from_coeffs(std::move(quo)), IntPolynomial::from_coeffs(std::move(rem))};
}

IntPolynomial poly_exact_div(const IntPolynomial& p, const IntPolynomial& q) {
  auto [quo, rem] = poly_divmod(p, q);
  if (!rem.is_zero()) throw std::domain_error("polynomial division not exact");
  return quo;
}

bool poly_divides(const IntPolynomial& q, const IntPolynomial& p) {
  if (q.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  if (p.degree() < q.degree()) return false;
  try {
    auto [quo, rem] = poly_divmod(p, q);
    (void)quo;
    return rem.is_zero();
  } catch (const std::domain_error&) {
    return false;
  }
}

IntPolynomial poly_pseudo_rem(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (p.degree() < q.degree()) return p;
  int delta = p.degree() - q.degree();
  Int mult = pow_int(q.leading(), static_cast<unsigned long>(delta) + 1);
  IntPolynomial r = p * mult;
  std::vector<Int> rem(r.coeffs());
  const Int& lq = q.leading();
  for (int k = delta; k >= 0; --k) {
    if (static_cast<int>(rem.size()) <= k + q.degree()) continue;
    Int lead = rem[k + q.degree()];
    if (lead == 0) continue;
    Int c = exact_div(lead, lq);
    for (int j = 0; j <= q.degree(); ++j) rem[k + j] -= c * q.coeff(j);
  }
  rem.resize(q.degree() > 0 ? q.degree() : 0);
  return IntPolynomial::from_coeffs(std::move(rem));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  // Primitive gcd, positive leading coefficient. For monic inputs the
  // result is monic.
  IntPolynomial p = a.primitive();
  IntPolynomial q = b.primitive();
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    IntPolynomial r = poly_pseudo_rem(p, q).primitive();
    p = q;
    q = r;
  }
  return p.primitive();
}

bool poly_is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

IntPolynomial poly_pow(const IntPolynomial& p, int e) {
  IntPolynomial r{1};
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

}  // namespace toralsym
