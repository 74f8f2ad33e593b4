// certify.hpp - unit-circle certification for symmetric lattice laws.
//
// A symmetric integer-valued X with top atom n gives the polynomial
// Q(w) = E w^(X+n), whose coefficient vector is a palindrome. X belongs to
// the class with purely imaginary MGF zeros exactly when Q has all its
// zeros on the unit circle. Certification routes:
//
//   * Enestrom-Kakeya: p_0/2 <= p_1 <= ... <= p_n  (sufficient),
//   * the power-sum condition
//       p_0^alpha / 2 + sum_{k<n} p_k^alpha <= (2/(m-2))^(alpha-1) p_n^alpha,
//     with m the number of nonzero coefficients of Q  (sufficient),
//   * exact test (Cohn reduction + Jury/Schur-Cohn): Q is on-circle iff
//     Q' has all zeros in the closed unit disk. The strict Jury table runs
//     in validated interval arithmetic with precision escalation, so every
//     decided verdict is exact; boundary/unresolved cases go through a
//     radius cascade Q'((1+eps)w), eps = 10^-2..10^-9, accepting two
//     consecutive agreeing scales, and otherwise report degenerate,
//   * numeric cross-check: Aberth-Ehrlich roots, max | |w|-1 |, and the
//     w -> 1/conj(w) pairing defect.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "typel/interval.hpp"
#include "typel/moments.hpp"
#include "typel/polynomial.hpp"
#include "typel/roots.hpp"
#include "typel/special.hpp"

namespace typel {

struct SelfInversivePolynomial {
  RatPoly poly;

  SelfInversivePolynomial() = default;
  explicit SelfInversivePolynomial(RatPoly p) : poly(std::move(p)) {
    if (poly.is_zero()) throw std::invalid_argument("SelfInversivePolynomial: zero polynomial");
    long long d = poly.degree();
    for (long long k = 0; 2 * k <= d; ++k)
      if (poly.c[static_cast<size_t>(k)] != poly.c[static_cast<size_t>(d - k)])
        throw std::invalid_argument("SelfInversivePolynomial: coefficients are not a palindrome");
  }
};

enum class TestVerdict { pass, fail, na };

inline const char* to_string(TestVerdict v) {
  switch (v) {
    case TestVerdict::pass: return "pass";
    case TestVerdict::fail: return "fail";
    default: return "na";
  }
}

// Q(w) = E w^(X+n) for the trimmed top atom n
inline SelfInversivePolynomial lattice_to_polynomial(const LatticeDistribution& d) {
  d.validate();
  size_t n = d.top_atom();
  std::vector<Rational> q(2 * n + 1, Rational(0));
  q[n] = d.p[0];
  for (size_t k = 1; k <= n; ++k) {
    q[n + k] = d.p[k];
    q[n - k] = d.p[k];
  }
  return SelfInversivePolynomial(RatPoly(std::move(q)));
}

// p_0/2 <= p_1 <= ... <= p_n, exact; pass certifies on-circle zeros
inline TestVerdict enestrom_kakeya(const LatticeDistribution& d) {
  d.validate();
  size_t n = d.top_atom();
  if (n == 0) return TestVerdict::na;
  if (d.p[0] / Rational(2) > d.p[1]) return TestVerdict::fail;
  for (size_t k = 1; k < n; ++k)
    if (d.p[k] > d.p[k + 1]) return TestVerdict::fail;
  return TestVerdict::pass;
}

// power-sum sufficient condition at exponent alpha >= 1. The inequality's
// atom indices run over the lattice; the exponent base uses the number of
// nonzero coefficients of Q, and alpha = 1 needs no base at all. Non-integer
// alpha is decided in validated high precision (na when undecidable).
inline TestVerdict sv_alpha_condition(const LatticeDistribution& d, const Rational& alpha) {
  d.validate();
  if (alpha < Rational(1)) throw std::invalid_argument("sv_alpha_condition: alpha must be >= 1");
  size_t n = d.top_atom();
  if (n == 0) return TestVerdict::na;

  if (alpha == Rational(1)) {
    Rational lhs = d.p[0] / Rational(2);
    for (size_t k = 1; k < n; ++k) lhs += d.p[k];
    return lhs <= d.p[n] ? TestVerdict::pass : TestVerdict::fail;
  }

  long long nonzero = d.p[0].is_zero() ? 0 : 1;
  for (size_t k = 1; k <= n; ++k)
    if (!d.p[k].is_zero()) nonzero += 2;
  if (nonzero <= 2) return TestVerdict::na;  // exponent base degenerates
  Rational base = Rational(2) / Rational(nonzero - 2);

  if (alpha.is_integer()) {
    long long ai = alpha.num().to_longlong();
    Rational lhs = d.p[0].pow(ai) / Rational(2);
    for (size_t k = 1; k < n; ++k) lhs += d.p[k].pow(ai);
    Rational rhs = base.pow(ai - 1) * d.p[n].pow(ai);
    return lhs <= rhs ? TestVerdict::pass : TestVerdict::fail;
  }

  for (long prec : {192L, 320L}) {
    auto powa = [&](const Rational& x) {
      return x.is_zero() ? BigFloat() : fpow(from_rational(x, prec), alpha, prec);
    };
    BigFloat lhs = fdiv_int(powa(d.p[0]), 2, prec);
    for (size_t k = 1; k < n; ++k) lhs = fadd(lhs, powa(d.p[k])).rounded(prec);
    BigFloat rhs = fmul(fpow(from_rational(base, prec), alpha - Rational(1), prec), powa(d.p[n]));
    BigFloat diff = fsub(rhs, lhs);
    // demand a margin well above accumulated rounding
    if (!fbelow_pow2(diff, prec - 48))
      return diff.sign() >= 0 ? TestVerdict::pass : TestVerdict::fail;
  }
  return TestVerdict::na;
}

namespace detail {

enum class JuryOutcome { stable, unstable, degenerate };

// strict Jury test: all roots in |z| < 1. Validated intervals; any
// comparison that cannot be separated at `prec` returns nullopt so the
// caller can escalate.
inline std::optional<JuryOutcome> jury_strict_at(const std::vector<Rational>& coeffs, long prec) {
  std::vector<IFloat> a;
  a.reserve(coeffs.size());
  for (const auto& c : coeffs) a.push_back(from_rational_i(c, prec));
  while (!a.empty()) {
    auto s = a.back().certain_sign();
    if (!s) return std::nullopt;
    if (*s != 0) break;
    a.pop_back();  // exact zero leading coefficient
  }
  if (a.size() <= 1) return JuryOutcome::stable;  // constants have no roots
  size_t n = a.size() - 1;
  auto lead_sign = a.back().certain_sign();
  if (*lead_sign < 0)
    for (auto& x : a) x = ineg(x);

  // f(1) > 0 and (-1)^n f(-1) > 0
  IFloat at1 = IFloat::exact_int(0), atm1 = IFloat::exact_int(0);
  for (size_t k = 0; k <= n; ++k) {
    at1 = iadd(at1, a[k], prec);
    atm1 = (k % 2 == 0) ? iadd(atm1, a[k], prec) : isub(atm1, a[k], prec);
  }
  if (n % 2 != 0) atm1 = ineg(atm1);
  for (const IFloat* v : {&at1, &atm1}) {
    auto s = v->certain_sign();
    if (!s) return std::nullopt;
    if (*s == 0) return JuryOutcome::degenerate;
    if (*s < 0) return JuryOutcome::unstable;
  }
  // |a_0| < a_n and the table conditions |b_0| > |b_last| per derived row
  std::vector<IFloat> row = a;
  for (;;) {
    size_t len = row.size();
    auto diff = isub(iabs(row[len - 1]), iabs(row[0]), prec);  // |last| - |first|
    auto s = diff.certain_sign();
    if (!s) return std::nullopt;
    bool first_round = (len == n + 1);
    int want = first_round ? 1 : -1;  // first row: |a_n| > |a_0|; later: |b_0| > |b_last|
    if (*s == 0) return JuryOutcome::degenerate;
    if (*s != want) return JuryOutcome::unstable;
    if (len <= 3) break;
    std::vector<IFloat> next(len - 1);
    for (size_t k = 0; k + 1 < len; ++k)
      next[k] = isub(imul(row[0], row[k], prec), imul(row[len - 1], row[len - 1 - k], prec), prec);
    row = std::move(next);
  }
  return JuryOutcome::stable;
}

inline JuryOutcome jury_strict(const std::vector<Rational>& coeffs) {
  for (long prec : {192L, 384L, 768L, 1536L, 3072L}) {
    auto out = jury_strict_at(coeffs, prec);
    if (out) return *out;
  }
  return JuryOutcome::degenerate;
}

}  // namespace detail

enum class CircleVerdict { on_circle, off_circle, degenerate };

inline const char* to_string(CircleVerdict v) {
  switch (v) {
    case CircleVerdict::on_circle: return "all-on-circle";
    case CircleVerdict::off_circle: return "not-all-on-circle";
    default: return "degenerate";
  }
}

struct SchurCohnResult {
  CircleVerdict verdict = CircleVerdict::degenerate;
  bool boundary = false;  // decided by the radius cascade, not the strict table
};

// Cohn reduction: self-inversive Q has all zeros on |w| = 1 iff Q' has all
// zeros in the closed unit disk
inline SchurCohnResult schur_cohn_unit_circle(const SelfInversivePolynomial& Q) {
  SchurCohnResult res;
  RatPoly dq = Q.poly.derivative();
  if (dq.degree() <= 0) {
    // Q constant or linear (palindrome => Q = c(1+w)): zeros on the circle
    res.verdict = CircleVerdict::on_circle;
    return res;
  }
  using detail::JuryOutcome;
  JuryOutcome direct = detail::jury_strict(dq.c);
  if (direct == JuryOutcome::stable) {
    res.verdict = CircleVerdict::on_circle;
    return res;
  }
  // roots not strictly inside: decide closed-disk membership by shrinking,
  // i.e. testing Q'((1+eps) w) strictly for eps = 10^-2 .. 10^-9
  res.boundary = true;
  int prev = -1;  // -1 unset, 0 fail, 1 pass
  Rational eps(1, 10);
  for (int k = 2; k <= 9; ++k) {
    eps = eps / Rational(10);  // 10^-k
    std::vector<Rational> scaled(dq.c.size());
    Rational f(1), onePlus = Rational(1) + eps;
    for (size_t i = 0; i < dq.c.size(); ++i) {
      scaled[i] = dq.c[i] * f;
      f *= onePlus;
    }
    JuryOutcome out = detail::jury_strict(scaled);
    if (out == JuryOutcome::degenerate) {
      prev = -1;
      continue;
    }
    int pass = out == JuryOutcome::stable ? 1 : 0;
    if (prev == pass) {
      res.verdict = pass ? CircleVerdict::on_circle : CircleVerdict::off_circle;
      return res;
    }
    prev = pass;
  }
  res.verdict = CircleVerdict::degenerate;
  return res;
}

struct NumericRootsReport {
  std::vector<cdouble> roots;
  double max_circle_deviation = 0.0;  // max | |w_i| - 1 |
  double max_pairing_defect = 0.0;    // distance of the root set from its 1/conj image
  double max_residual = 0.0;
  bool converged = true;
};

inline NumericRootsReport numeric_roots(const SelfInversivePolynomial& Q, double tol = 1e-12) {
  if (Q.poly.degree() < 1) throw std::invalid_argument("numeric_roots: degree must be >= 1");
  std::vector<creal> c;
  c.reserve(Q.poly.c.size());
  for (const auto& x : Q.poly.c) c.push_back(creal(x.to_long_double(), 0.0L));
  RootResult rr = find_roots(std::move(c));
  NumericRootsReport rep;
  rep.roots = rr.roots;
  rep.max_residual = rr.max_residual;
  rep.converged = rr.converged && rr.max_residual < tol * 1e3;
  long double dev = 0.0L, pairing = 0.0L;
  for (const auto& w : rr.roots_ext) dev = std::max(dev, std::abs(std::abs(w) - 1.0L));
  for (const auto& w : rr.roots_ext) {
    creal mirror = 1.0L / std::conj(w);
    long double best = 1e300L;
    for (const auto& v : rr.roots_ext) best = std::min(best, std::abs(v - mirror));
    pairing = std::max(pairing, best);
  }
  rep.max_circle_deviation = static_cast<double>(dev);
  rep.max_pairing_defect = static_cast<double>(pairing);
  return rep;
}

struct CertReport {
  TestVerdict ek = TestVerdict::na;
  std::vector<std::pair<Rational, TestVerdict>> sv;  // (alpha, verdict)
  SchurCohnResult schur_cohn;
  NumericRootsReport numeric;
  bool has_numeric = false;
  enum class Overall { certified, refuted, inconclusive } overall = Overall::inconclusive;
  std::string note;
};

inline const char* to_string(CertReport::Overall v) {
  switch (v) {
    case CertReport::Overall::certified: return "certified";
    case CertReport::Overall::refuted: return "refuted";
    default: return "inconclusive";
  }
}

// run every certificate and compose the overall verdict: certified iff a
// rigorous test passes; refuted iff the exact test says off-circle and the
// numeric roots clearly leave the circle
inline CertReport classify(const LatticeDistribution& d, const std::vector<Rational>& alphas,
                           double tol = 1e-9) {
  CertReport rep;
  rep.ek = enestrom_kakeya(d);
  for (const auto& alpha : alphas) rep.sv.emplace_back(alpha, sv_alpha_condition(d, alpha));
  size_t n = d.top_atom();
  if (n == 0) {
    // point mass at zero: the MGF is constant 1 with no zeros at all
    rep.overall = CertReport::Overall::certified;
    rep.note = "degenerate point mass at 0; MGF has no zeros";
    rep.schur_cohn.verdict = CircleVerdict::on_circle;
    return rep;
  }
  SelfInversivePolynomial Q = lattice_to_polynomial(d);
  rep.schur_cohn = schur_cohn_unit_circle(Q);
  if (Q.poly.degree() >= 1) {
    rep.numeric = numeric_roots(Q, tol);
    rep.has_numeric = true;
  }
  bool rigorous_pass = rep.ek == TestVerdict::pass ||
                       rep.schur_cohn.verdict == CircleVerdict::on_circle;
  for (const auto& [alpha, v] : rep.sv) rigorous_pass = rigorous_pass || v == TestVerdict::pass;
  if (rigorous_pass)
    rep.overall = CertReport::Overall::certified;
  else if (rep.schur_cohn.verdict == CircleVerdict::off_circle && rep.has_numeric &&
           rep.numeric.max_circle_deviation > 10.0 * tol)
    rep.overall = CertReport::Overall::refuted;
  else
    rep.overall = CertReport::Overall::inconclusive;
  if (rep.schur_cohn.boundary && rep.schur_cohn.verdict == CircleVerdict::on_circle)
    rep.note = "unit-circle zeros include boundary multiplicity; decided by radius cascade";
  return rep;
}

// diagnostic scan for real zeros of phi(t) = integral cos(tx) f(x) dx for an
// even density f on [-1,1]; not a certificate
struct DensityScan {
  bool density_ok = false;   // integrates to 1 within 1e-8
  std::vector<double> zeros;  // bracketed + bisected real zeros in (0, t_max]
};

namespace detail {

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, eps * 0.5, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, eps * 0.5, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), eps, 40);
}

}  // namespace detail

inline DensityScan charfn_real_zero_scan(const std::function<double(double)>& density,
                                         double t_max, double step) {
  if (!(t_max > 0.0) || !(step > 0.0))
    throw std::invalid_argument("charfn_real_zero_scan: t_max and step must be positive");
  DensityScan out;
  double mass = 2.0 * detail::integrate(density, 0.0, 1.0, 1e-10);
  out.density_ok = std::abs(mass - 1.0) < 1e-8;
  auto phi = [&](double t) {
    return 2.0 * detail::integrate([&](double x) { return std::cos(t * x) * density(x); }, 0.0,
                                   1.0, 1e-11);
  };
  double prev_t = 0.0, prev_v = 1.0;  // phi(0) = 1 for a density
  for (double t = step; t <= t_max + 1e-12; t += step) {
    double v = phi(t);
    if (prev_v == 0.0 || (prev_v < 0.0) != (v < 0.0)) {
      double lo = prev_t, hi = t, vlo = prev_v;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double vm = phi(mid);
        if ((vlo < 0.0) != (vm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          vlo = vm;
        }
      }
      out.zeros.push_back(0.5 * (lo + hi));
    }
    prev_t = t;
    prev_v = v;
  }
  return out;
}

}  // namespace typel
