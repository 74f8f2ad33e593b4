// gausspoly.hpp - laws with characteristic function e^(-a t^2/2) prod (1 - b_j t^2).
//
// Multiplying a characteristic function by (1 - b t^2) adds b times the
// second derivative of the density, so these laws have exact densities
// P(x) e^(-x^2/(2a)) / sqrt(2 pi a) with P an even rational polynomial.
// Absolute moments reduce to Gamma closed forms term by term; quadrature
// in the usual sense never enters, so the only approximate ingredient is
// Gamma itself. Includes the closed-form |Z_b| moments, the two-sided
// envelope E|sigma Z_1|^p <= E|X|^p <= E|sigma Z_0|^p for p >= 3, the
// two-zero interlacing analysis of the g_lambda family, a Schur-concavity
// probe along majorization steps, and a seeded sampler.

#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "typel/moments.hpp"
#include "typel/polynomial.hpp"
#include "typel/special.hpp"

namespace typel {

struct PolyGaussDensity {
  Rational a;   // Gaussian scale: kernel e^(-x^2/(2a))
  RatPoly P;    // even polynomial factor, P >= 0 on the real line

  Rational eval_poly(const Rational& x) const { return P.eval(x); }
};

// substitute u = x^2 in an even polynomial
inline RatPoly even_poly_in_u(const RatPoly& P) {
  RatPoly out;
  out.c.resize(P.c.size() / 2 + 1, Rational(0));
  for (size_t k = 0; k < P.c.size(); ++k) {
    if (P.c[k].is_zero()) continue;
    if (k % 2 != 0) throw std::invalid_argument("even_poly_in_u: polynomial has odd terms");
    out.c[k / 2] = P.c[k];
  }
  out.trim();
  return out;
}

// apply prod_j (1 + b_j D^2) to the N(0, a) density; requires sum b_j <= a
// so the result is a bona fide density (verified by an exact Sturm
// certificate on P(sqrt(u)))
inline PolyGaussDensity density_from_law(const GaussPolyLaw& law) {
  law.validate();
  if (law.sum_b() > law.a)
    throw std::invalid_argument("density_from_law: requires sum b_j <= a");
  PolyGaussDensity d;
  d.a = law.a;
  d.P = RatPoly::constant(Rational(1));
  Rational inv_a = Rational(1) / law.a;
  // (P e)'' = (P'' - (2x/a) P' + (x^2/a^2 - 1/a) P) e for e = e^(-x^2/(2a))
  RatPoly x2_term(std::vector<Rational>{-inv_a, Rational(0), inv_a * inv_a});
  for (const auto& b : law.b) {
    if (b.is_zero()) continue;
    RatPoly P = d.P;
    RatPoly second = P.derivative().derivative() -
                     P.derivative() * RatPoly(std::vector<Rational>{Rational(0), Rational(2) * inv_a}) +
                     x2_term * P;
    d.P = P + second * b;
  }
  if (!nonneg_on_halfline(even_poly_in_u(d.P)))
    throw std::logic_error(
        "density_from_law: positivity certificate failed despite sum b_j <= a (consistency alarm)");
  // total mass stays exactly 1 under the operator (second derivatives
  // integrate to zero); the m_0 identity verifies the expansion
  Rational mass(0);
  for (size_t k = 0; 2 * k < d.P.c.size(); ++k)
    mass += d.P.coeff(2 * k) * d.a.pow(static_cast<long long>(k)) *
            Rational(gaussian_even_moment(static_cast<unsigned>(k)));
  if (mass != Rational(1))
    throw std::logic_error("density_from_law: unit-mass identity failed (consistency alarm)");
  return d;
}

// exact even moments by termwise Gaussian integration:
// E X^(2n) = sum_k c_{2k} a^(k+n) (2(k+n)-1)!!
inline MomentSequence even_moments_from_density(const PolyGaussDensity& d, size_t N) {
  std::vector<Rational> m(N + 1);
  for (size_t n = 0; n <= N; ++n) {
    Rational acc(0);
    for (size_t k = 0; 2 * k < d.P.c.size(); ++k) {
      const Rational& c = d.P.coeff(2 * k);
      if (c.is_zero()) continue;
      acc += c * d.a.pow(static_cast<long long>(k + n)) *
             Rational(gaussian_even_moment(static_cast<unsigned>(k + n)));
    }
    m[n] = acc;
  }
  return make_moment_sequence(std::move(m));
}

// E|X|^p = sum_k c_{2k} a^((p+2k)/2) 2^((p+2k)/2) Gamma((p+2k+1)/2)/sqrt(pi),
// a finite exact-to-precision sum (p >= 0)
inline BigFloat abs_moment_quadrature(const PolyGaussDensity& d, const Rational& p, int digits) {
  if (p.sign() < 0) throw std::invalid_argument("abs_moment_quadrature: p < 0");
  if (digits <= 0) throw std::invalid_argument("abs_moment_quadrature: digits must be >= 1");
  long prec = static_cast<long>(digits * 3.33) + 48;
  BigFloat acc;
  BigFloat sqrt_pi = fsqrt(pi_const(prec), prec);
  for (size_t k = 0; 2 * k <= static_cast<size_t>(std::max<long long>(d.P.degree(), 0)); ++k) {
    const Rational& c = d.P.coeff(2 * k);
    if (c.is_zero()) continue;
    Rational s = p + Rational(static_cast<long long>(2 * k));
    BigFloat term = fpow(from_rational(Rational(2) * d.a, prec), s / Rational(2), prec);
    term = fmul(term, gamma_rational((s + Rational(1)) / Rational(2), prec));
    term = fdiv(term, sqrt_pi, prec);
    acc = fadd(acc, fmul(from_rational(c, prec), term)).rounded(prec);
  }
  return acc;
}

// E|(1+2b)^(-1/2) Z_b|^p = 2^(p/2) Gamma((p+1)/2)/sqrt(pi) * (1+pb)/(1+2b)^(p/2)
inline BigFloat abs_moment_closed_zb(const Rational& p, const Rational& b, int digits,
                                     bool normalized = true) {
  if (p.sign() < 0) throw std::invalid_argument("abs_moment_closed_zb: p < 0");
  long prec = static_cast<long>(digits * 3.33) + 48;
  BigFloat m = gaussian_abs_moment_bf(p, prec);
  BigFloat factor = from_rational(Rational(1) + p * b, prec);
  BigFloat out = fmul(m, factor).rounded(prec);
  if (normalized) {
    BigFloat denom = fpow(from_rational(Rational(1) + Rational(2) * b, prec), p / Rational(2), prec);
    out = fdiv(out, denom, prec);
  }
  return out;
}

struct EnvelopeVerdict {
  bool holds = false;
  BigFloat lower_slack;  // E|X|^p - E|sigma Z_1|^p
  BigFloat upper_slack;  // E|sigma Z_0|^p - E|X|^p
  BigFloat certified_error;  // agreement gap between the two working precisions
};

// E|sigma Z_1|^p <= E|X|^p <= E|sigma Z_0|^p with sigma^2 = Var(X); p >= 3
// unless diagnostic. Slacks are evaluated at two precisions and certified
// by their agreement.
inline EnvelopeVerdict moment_envelope_check(const GaussPolyLaw& law, const Rational& p,
                                             int digits, bool diagnostic = false) {
  if (!diagnostic && p < Rational(3))
    throw std::invalid_argument("moment_envelope_check: p < 3 is outside the hypothesis");
  PolyGaussDensity dens = density_from_law(law);
  Rational var = law.variance();

  auto eval = [&](int dg) {
    long prec = static_cast<long>(dg * 3.33) + 48;
    BigFloat ex = abs_moment_quadrature(dens, p, dg);
    BigFloat sigma_p = fpow(from_rational(var, prec), p / Rational(2), prec);
    BigFloat mp = gaussian_abs_moment_bf(p, prec);
    BigFloat upper = fmul(sigma_p, mp).rounded(prec);                      // E|sigma Z_0|^p
    BigFloat lower = fmul(upper, from_rational(Rational(1) + p, prec));    // * (1 + p)
    lower = fdiv(lower, fpow(BigFloat::from_int(3), p / Rational(2), prec), prec);
    return std::pair<BigFloat, BigFloat>{fsub(ex, lower), fsub(upper, ex)};
  };
  auto [lo1, up1] = eval(digits);
  auto [lo2, up2] = eval(digits + 12);

  EnvelopeVerdict v;
  v.lower_slack = lo2;
  v.upper_slack = up2;
  BigFloat gap = fadd(fsub(lo1, lo2).abs(), fsub(up1, up2).abs());
  v.certified_error = gap;
  // tolerate slack >= -certified gap (the tight laws sit at exactly zero)
  BigFloat tol = fadd(gap, fmul_int(gap, 8));
  v.holds = fcmp(lo2, -tol) >= 0 && fcmp(up2, -tol) >= 0;
  return v;
}

// sigma Z_1 has E|sigma Z_1|^p = sigma^p M_p (1+p) with M_p = E|G|^p; note
// E|Z_1|^p / E|Z_0|^p = 1 + p, used above via the b = 1 closed form

struct GLambda {
  Rational lambda;  // in (0,1)

  explicit GLambda(Rational l) : lambda(std::move(l)) {
    if (lambda.sign() <= 0 || lambda >= Rational(1))
      throw std::invalid_argument("GLambda: lambda must be in (0,1)");
  }
  // g_lambda(x) = (x^2 + lambda(1-lambda)(3 - 6x^2 + x^4)) e^(-x^2/2)/sqrt(2 pi)
  RatPoly poly_factor() const {
    Rational c = lambda * (Rational(1) - lambda);
    return RatPoly(std::vector<Rational>{Rational(3) * c, Rational(0), Rational(1) - Rational(6) * c,
                                         Rational(0), c});
  }
  PolyGaussDensity density() const { return PolyGaussDensity{Rational(1), poly_factor()}; }
};

struct GLambdaAnalysis {
  BigFloat zero_lo, zero_hi;  // the two positive zeros: x = sqrt(3 -+ sqrt(6))
  bool sign_pattern_ok = false;  // + - + on (0, inf) for 0 < l1 < l2 < 1/2
};

// g_{l2} - g_{l1} shares the sign of (l2 - l1)(1 - l1 - l2)(3 - 6x^2 + x^4);
// the quartic's positive roots are x^2 = 3 +- sqrt(6)
inline GLambdaAnalysis g_lambda_analysis(const Rational& l1, const Rational& l2, int digits = 30) {
  if (!(Rational(0) < l1 && l1 <= l2 && l2 < Rational(1, 2)))
    throw std::invalid_argument("g_lambda_analysis: requires 0 < l1 <= l2 < 1/2");
  long prec = static_cast<long>(digits * 3.33) + 32;
  GLambdaAnalysis out;
  BigFloat sqrt6 = fsqrt(BigFloat::from_int(6), prec);
  out.zero_lo = fsqrt(fsub(BigFloat::from_int(3), sqrt6), prec);
  out.zero_hi = fsqrt(fadd(BigFloat::from_int(3), sqrt6), prec);

  if (l1 == l2) {
    out.sign_pattern_ok = true;  // identically zero difference
    return out;
  }
  // sample strictly inside the three sign regions with exact rationals:
  // 3 - sqrt(6) ~ 0.5505, 3 + sqrt(6) ~ 5.4495
  RatPoly quartic_in_u(std::vector<Rational>{Rational(3), Rational(-6), Rational(1)});
  Rational pts[3] = {Rational(1, 2), Rational(3, 2), Rational(3)};
  int expected[3] = {1, -1, 1};
  Rational front = (l2 - l1) * (Rational(1) - l1 - l2);
  out.sign_pattern_ok = true;
  for (int i = 0; i < 3; ++i) {
    // sign of g_{l2}-g_{l1} at x = pts[i] (u = x^2)
    Rational diff = front * quartic_in_u.eval(pts[i] * pts[i]);
    if (diff.sign() != expected[i]) out.sign_pattern_ok = false;
    // cross-check against the densities themselves (the Gaussian factor is positive)
    Rational direct = GLambda(l2).poly_factor().eval(pts[i]) - GLambda(l1).poly_factor().eval(pts[i]);
    if (direct.sign() != expected[i]) out.sign_pattern_ok = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schur-concavity probe

using ProbeLaw = std::variant<std::monostate, LatticeDistribution, GaussPolyLaw>;

// exact majorization test: x majorized by y (equal totals, sorted partial
// sums of y dominate)
inline bool majorizes(std::vector<Rational> y, std::vector<Rational> x) {
  size_t n = std::max(x.size(), y.size());
  x.resize(n, Rational(0));
  y.resize(n, Rational(0));
  auto desc = [](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return b < a; });
  };
  desc(x);
  desc(y);
  Rational sx(0), sy(0);
  for (size_t k = 0; k < n; ++k) {
    sx += x[k];
    sy += y[k];
    if (sy < sx) return false;
  }
  return sx == sy;
}

namespace detail {

// K(s, mu) = int_0^inf y^s e^(-(y-mu)^2/(2a)) dy via the entire series
// e^(-mu^2/2a) sum_j (mu/a)^j/j! * (1/2)(2a)^((s+j+1)/2) Gamma((s+j+1)/2)
inline BigFloat halfline_gauss_moment(const Rational& s, const Rational& mu, const Rational& a,
                                      long prec) {
  long g = prec + 48;
  BigFloat pref = fexp_rational(-(mu * mu) / (Rational(2) * a), g);
  BigFloat acc;
  Rational ratio = mu / a;
  Rational ratio_pow(1);
  BigInt fact(1);
  BigFloat two_a = from_rational(Rational(2) * a, g);
  long long top_mag = -(1LL << 60);
  for (long long j = 0; j < 4000; ++j) {
    if (j > 0) {
      ratio_pow *= ratio;
      fact *= BigInt(j);
    }
    Rational expo = (s + Rational(j + 1)) / Rational(2);
    BigFloat term = fmul(from_rational(ratio_pow / Rational(fact), g),
                         fmul(fpow(two_a, expo, g), gamma_rational(expo, g)));
    term = fdiv_int(term, 2, g);
    acc = fadd(acc, term).rounded(g);
    top_mag = std::max(top_mag, term.abs().mag_exponent());
    if (j > 4 && term.abs().mag_exponent() < top_mag - (g + 16)) break;
  }
  return fmul(pref, acc).rounded(prec);
}

// E|S + c|^p for S with density P(x) e^(-x^2/(2a))/sqrt(2 pi a)
inline BigFloat shifted_abs_moment(const PolyGaussDensity& d, const Rational& c, const Rational& p,
                                   long prec) {
  if (c.is_zero()) {
    return abs_moment_quadrature(d, p, static_cast<int>(prec / 3.4));
  }
  long g = prec + 32;
  // P(y - c) = sum_m d_m y^m
  RatPoly shifted = RatPoly::constant(Rational(0));
  RatPoly y_minus_c(std::vector<Rational>{-c, Rational(1)});
  RatPoly pw = RatPoly::constant(Rational(1));
  for (size_t k = 0; k < d.P.c.size(); ++k) {
    shifted = shifted + pw * d.P.c[k];
    pw = pw * y_minus_c;
  }
  BigFloat acc;
  for (size_t m = 0; m < shifted.c.size(); ++m) {
    if (shifted.c[m].is_zero()) continue;
    Rational s = p + Rational(static_cast<long long>(m));
    BigFloat j = halfline_gauss_moment(s, c, d.a, g);
    BigFloat j2 = halfline_gauss_moment(s, -c, d.a, g);
    if (m % 2 != 0) j2 = -j2;
    acc = fadd(acc, fmul(from_rational(shifted.c[m], g), fadd(j, j2))).rounded(g);
  }
  BigFloat norm = fsqrt(fmul(from_rational(Rational(2) * d.a, g), pi_const(g)).rounded(g), g);
  return fdiv(acc, norm, prec);
}

}  // namespace detail

// Psi(b) = E|sum_j sqrt(b_j) X_j + Y|^p with the X_j independent copies of
// Z_1; the sum is again a polynomial-Gaussian law with scale sum b_j
inline BigFloat psi_value(const std::vector<Rational>& b, const Rational& p, const ProbeLaw& Y,
                          int digits) {
  long prec = static_cast<long>(digits * 3.33) + 48;
  std::vector<Rational> bs;
  Rational total(0);
  for (const auto& x : b) {
    if (x.sign() < 0) throw std::invalid_argument("psi_value: negative weight");
    if (!x.is_zero()) bs.push_back(x);
    total += x;
  }
  if (std::holds_alternative<GaussPolyLaw>(Y)) {
    const auto& yl = std::get<GaussPolyLaw>(Y);
    GaussPolyLaw composed(total + yl.a, bs);
    for (const auto& x : yl.b) composed.b.push_back(x);
    return abs_moment_quadrature(density_from_law(composed), p, digits);
  }
  if (total.is_zero()) {
    // degenerate sum: Psi = E|Y|^p with Y a lattice (or zero)
    if (std::holds_alternative<std::monostate>(Y)) return BigFloat();
    const auto& d = std::get<LatticeDistribution>(Y);
    BigFloat acc;
    for (size_t k = 1; k < d.p.size(); ++k) {
      if (d.p[k].is_zero()) continue;
      BigFloat t = fpow(BigFloat::from_int(static_cast<long long>(k)), p, prec);
      acc = fadd(acc, fmul(fmul_int(from_rational(d.p[k], prec), 2), t)).rounded(prec);
    }
    return acc;
  }
  GaussPolyLaw slaw(total, bs);
  PolyGaussDensity dens = density_from_law(slaw);
  if (std::holds_alternative<std::monostate>(Y))
    return abs_moment_quadrature(dens, p, digits);
  const auto& d = std::get<LatticeDistribution>(Y);
  d.validate();
  BigFloat acc = fmul(from_rational(d.p[0], prec),
                      detail::shifted_abs_moment(dens, Rational(0), p, prec));
  for (size_t k = 1; k < d.p.size(); ++k) {
    if (d.p[k].is_zero()) continue;
    BigFloat part = detail::shifted_abs_moment(dens, Rational(static_cast<long long>(k)), p, prec);
    acc = fadd(acc, fmul(fmul_int(from_rational(d.p[k], prec), 2), part)).rounded(prec);
  }
  return acc;
}

struct SchurProbeVerdict {
  bool holds = false;
  BigFloat psi_b, psi_bprime;
  BigFloat margin;  // psi(b) - psi(b')
};

// b majorized by b' implies Psi(b) >= Psi(b'); p >= 3
inline SchurProbeVerdict schur_concavity_probe(const std::vector<Rational>& b,
                                               const std::vector<Rational>& bprime,
                                               const Rational& p, const ProbeLaw& Y, int digits) {
  if (p < Rational(3))
    throw std::invalid_argument("schur_concavity_probe: p < 3 is outside the hypothesis");
  if (!majorizes(bprime, b))
    throw std::invalid_argument("schur_concavity_probe: b is not majorized by b'");
  SchurProbeVerdict v;
  v.psi_b = psi_value(b, p, Y, digits);
  v.psi_bprime = psi_value(bprime, p, Y, digits);
  v.margin = fsub(v.psi_b, v.psi_bprime);
  // equality up to working precision counts as holding
  BigFloat tol(BigInt(1), v.psi_b.mag_exponent() - static_cast<long long>(digits * 3.1));
  v.holds = fcmp(v.margin, -tol) >= 0;
  return v;
}

struct ZbMonotoneVerdict {
  bool strictly_decreasing = true;
  bool derivative_negative = true;  // sign check of p(2-p) b (1+2b)^(-p/2-1)
  std::vector<BigFloat> values;
};

// the normalized closed form is strictly decreasing in b for fixed p > 2
inline ZbMonotoneVerdict zb_monotone_in_b(const Rational& p, const std::vector<Rational>& grid,
                                          int digits = 30) {
  ZbMonotoneVerdict v;
  long prec = static_cast<long>(digits * 3.33) + 32;
  for (const auto& b : grid) v.values.push_back(abs_moment_closed_zb(p, b, digits));
  for (size_t i = 0; i + 1 < v.values.size(); ++i)
    if (fcmp(v.values[i + 1], v.values[i]) >= 0) v.strictly_decreasing = false;
  // derivative of (1+pb)(1+2b)^(-p/2) is p b (2-p) (1+2b)^(-p/2-1)
  for (const auto& b : grid) {
    if (b.is_zero()) continue;  // derivative vanishes at b = 0
    Rational sign_part = p * b * (Rational(2) - p);
    BigFloat deriv = fmul(from_rational(sign_part, prec),
                          fpow(from_rational(Rational(1) + Rational(2) * b, prec),
                               -(p / Rational(2) + Rational(1)), prec));
    if (p > Rational(2) && deriv.sign() >= 0) v.derivative_negative = false;
  }
  return v;
}

// deterministic sampler: X = sum_j sqrt(b_j) S_j R_j + sqrt(a - sum b_j) N,
// where R_j is a 3-dimensional Gaussian radius (|Z_1| is chi with 3 dof),
// S_j a random sign, N standard normal; all normals via the polar method
class GaussPolySampler {
 public:
  GaussPolySampler(GaussPolyLaw law, uint64_t seed) : law_(std::move(law)), rng_(seed) {
    law_.validate();
    if (law_.sum_b() > law_.a)
      throw std::invalid_argument("GaussPolySampler: requires sum b_j <= a");
    remainder_ = std::sqrt((law_.a - law_.sum_b()).to_double());
    for (const auto& b : law_.b) scale_.push_back(std::sqrt(b.to_double()));
  }

  double next() {
    double x = remainder_ * normal();
    for (double s : scale_) {
      if (s == 0.0) continue;
      double g1 = normal(), g2 = normal(), g3 = normal();
      double radius = std::sqrt(g1 * g1 + g2 * g2 + g3 * g3);
      double sign = (rng_() & 1ULL) ? 1.0 : -1.0;
      x += s * sign * radius;
    }
    return x;
  }

 private:
  GaussPolyLaw law_;
  std::mt19937_64 rng_;
  double remainder_;
  std::vector<double> scale_;
  bool have_spare_ = false;
  double spare_ = 0.0;

  double uniform() { return (rng_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    for (;;) {
      double u = 2.0 * uniform() - 1.0;
      double v = 2.0 * uniform() - 1.0;
      double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
      }
    }
  }
};

inline std::vector<double> sample(const GaussPolyLaw& law, uint64_t seed, size_t count) {
  GaussPolySampler s(law, seed);
  std::vector<double> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

// homogeneity utility: rescale so sum b_j = 1 (the X/sqrt(s) law); returns
// the scaled law and the factor s
inline std::pair<GaussPolyLaw, Rational> envelope_normalize(const GaussPolyLaw& law) {
  Rational s = law.sum_b();
  if (s.sign() <= 0) throw std::invalid_argument("envelope_normalize: requires sum b_j > 0");
  GaussPolyLaw out(law.a / s, {});
  for (const auto& b : law.b) out.b.push_back(b / s);
  return {out, s};
}

}  // namespace typel
