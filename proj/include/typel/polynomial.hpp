// polynomial.hpp - dense univariate polynomials over the rationals.
//
// Coefficients are stored low-to-high with no trailing zeros. Includes
// exact Euclidean division, gcd, Sturm chains (distinct real roots in a
// half-open interval), Yun squarefree decomposition, and the
// odd-multiplicity part used for sign-change certificates.

#pragma once

#include <stdexcept>
#include <vector>

#include "typel/rational.hpp"

namespace typel {

struct RatPoly {
  std::vector<Rational> c;  // c[k] is the coefficient of x^k

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rational& v) {
    RatPoly p;
    if (!v.is_zero()) p.c = {v};
    return p;
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  // degree of the zero polynomial is -1
  long long degree() const { return static_cast<long long>(c.size()) - 1; }
  const Rational& lead() const {
    if (c.empty()) throw std::domain_error("RatPoly: leading coeff of zero polynomial");
    return c.back();
  }
  Rational coeff(size_t k) const { return k < c.size() ? c[k] : Rational(0); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  RatPoly derivative() const {
    RatPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d.c[k - 1] = c[k] * Rational(static_cast<long long>(k));
    return d;
  }
};

inline RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

inline RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

inline RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  RatPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

inline RatPoly operator*(const RatPoly& a, const Rational& s) {
  if (s.is_zero()) return RatPoly();
  RatPoly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

inline void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) throw std::domain_error("RatPoly: division by zero polynomial");
  q = RatPoly();
  r = a;
  long long db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    long long shift = r.degree() - db;
    Rational f = r.lead() / b.lead();
    if (q.c.size() < static_cast<size_t>(shift + 1)) q.c.resize(shift + 1, Rational(0));
    q.c[shift] += f;
    for (long long i = 0; i <= db; ++i)
      r.c[i + shift] -= f * b.c[i];
    r.trim();
  }
  q.trim();
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    poly_divmod(a, b, q, r);
    a = b;
    b = r;
    // normalize to monic to keep rationals small
    if (!b.is_zero()) {
      Rational inv = Rational(1) / b.lead();
      for (auto& x : b.c) x *= inv;
    }
  }
  if (!a.is_zero()) {
    Rational inv = Rational(1) / a.lead();
    for (auto& x : a.c) x *= inv;
  }
  return a;
}

inline RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  poly_divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("RatPoly: inexact division");
  return q;
}

// Yun's algorithm: p = prod f_i^i with the f_i squarefree and coprime
inline std::vector<RatPoly> yun_squarefree(const RatPoly& p) {
  std::vector<RatPoly> out;
  if (p.degree() <= 0) return out;
  RatPoly d = p.derivative();
  RatPoly a = poly_gcd(p, d);
  RatPoly b = poly_div_exact(p, a);
  RatPoly c = poly_div_exact(d, a);
  RatPoly dd = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly f = poly_gcd(b, dd);
    out.push_back(f);
    b = poly_div_exact(b, f);
    dd = poly_div_exact(dd, f) - b.derivative();
  }
  return out;
}

// product of squarefree factors with odd multiplicity: the locus where p
// changes sign
inline RatPoly odd_multiplicity_part(const RatPoly& p) {
  RatPoly r = RatPoly::constant(Rational(1));
  auto fact = yun_squarefree(p);
  for (size_t i = 0; i < fact.size(); ++i)
    if (i % 2 == 0) r = r * fact[i];  // multiplicity i+1 odd
  return r;
}

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    RatPoly q, r;
    poly_divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    for (auto& x : r.c) x = -x;
    chain.push_back(r);
  }
  return chain;
}

inline int sturm_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// number of distinct real roots of p in (a, b]
inline int sturm_count(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  auto chain = sturm_chain(p);
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Cauchy bound: all real roots lie in [-B, B]
inline Rational cauchy_root_bound(const RatPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  for (size_t i = 0; i + 1 < p.c.size(); ++i) m = max(m, (p.c[i] / p.lead()).abs());
  return m + Rational(1);
}

// exact certificate that p(x) >= 0 for all x in [0, inf)
inline bool nonneg_on_halfline(const RatPoly& p) {
  if (p.is_zero()) return true;
  if (p.eval(Rational(0)).sign() < 0) return false;
  if (p.lead().sign() < 0) return false;
  RatPoly odd = odd_multiplicity_part(p);
  if (odd.degree() < 1) return true;
  Rational bound = cauchy_root_bound(p);
  return sturm_count(odd, Rational(0), bound) == 0;
}

}  // namespace typel
