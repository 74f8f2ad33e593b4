// special.hpp - high-precision elementary and special functions.
//
// exp: binary argument reduction + Taylor series.
// ln:  mantissa reduction to [3/4, 3/2) + atanh series, k*ln2 correction.
// pi:  Machin's formula 16 atan(1/5) - 4 atan(1/239).
// gamma: exact closed forms at integers and half-integers; otherwise
//   Stirling's series after shifting the argument far enough right that
//   the first omitted term (which bounds the remainder for real positive
//   arguments) is below the target precision. Bernoulli numbers are exact
//   rationals from the defining recurrence.
//
// All routines take a precision in bits and carry internal guard bits; the
// result is correct to a few ulps at the requested precision.

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "typel/bigfloat.hpp"
#include "typel/bigint.hpp"
#include "typel/rational.hpp"

namespace typel {

namespace detail {

inline const BigFloat& cached_const(int which, long prec) {
  thread_local std::map<std::pair<int, long>, BigFloat> cache;
  auto it = cache.find({which, prec});
  if (it != cache.end()) return it->second;

  BigFloat v;
  long g = prec + 32;
  if (which == 0) {
    // ln 2 = 2 atanh(1/3) = 2 sum (1/3)^(2j+1) / (2j+1)
    BigFloat sum;
    BigInt p3(3);
    BigInt pw(3);  // 3^(2j+1)
    for (long long j = 0;; ++j) {
      BigFloat term = fdiv(BigFloat(BigInt(2)), BigFloat(pw * BigInt(2 * j + 1)), g);
      sum = fadd(sum, term).rounded(g);
      if (fbelow_pow2(term, g + 4)) break;
      pw = pw * p3 * p3;
    }
    v = sum.rounded(prec);
  } else {
    // pi via Machin: 16 atan(1/5) - 4 atan(1/239)
    auto atan_inv = [&](long long n) {
      BigFloat sum;
      BigInt nn(n);
      BigInt pw(n);  // n^(2j+1)
      int s = 1;
      for (long long j = 0;; ++j) {
        BigFloat term = fdiv(BigFloat(BigInt(s)), BigFloat(pw * BigInt(2 * j + 1)), g);
        sum = fadd(sum, term).rounded(g);
        if (fbelow_pow2(term, g + 4)) break;
        pw = pw * nn * nn;
        s = -s;
      }
      return sum;
    };
    v = fsub(fmul_int(atan_inv(5), 16), fmul_int(atan_inv(239), 4)).rounded(prec);
  }
  return cache.emplace(std::make_pair(which, prec), v).first->second;
}

}  // namespace detail

inline BigFloat ln2_const(long prec) { return detail::cached_const(0, prec); }
inline BigFloat pi_const(long prec) { return detail::cached_const(1, prec); }

inline BigFloat fexp(const BigFloat& x, long prec) {
  if (x.is_zero()) return BigFloat::from_int(1);
  // reduce so |r| <= 1/2, exp(x) = exp(r)^(2^m)
  long long mag = x.mag_exponent();  // |x| < 2^mag
  long m = mag > 0 ? static_cast<long>(mag) + 1 : 1;
  long g = prec + m + 32;
  BigFloat r = x;
  r.e2 -= m;
  BigFloat sum = BigFloat::from_int(1);
  BigFloat term = BigFloat::from_int(1);
  for (long long k = 1;; ++k) {
    term = fdiv_int(fmul(term, r), k, g);
    sum = fadd(sum, term).rounded(g);
    if (fbelow_pow2(term, g + 4)) break;
  }
  for (long i = 0; i < m; ++i) sum = fmul(sum, sum).rounded(g);
  return sum.rounded(prec);
}

inline BigFloat fln(const BigFloat& x, long prec) {
  if (x.sign() <= 0) throw std::domain_error("BigFloat: log of non-positive value");
  long g = prec + 32;
  // x = f * 2^k with f in [1/2, 1); lift to [3/4, 3/2)
  long long k = x.mag_exponent();
  BigFloat f = x;
  f.e2 -= k;
  BigFloat thr = from_rational(Rational(BigInt(3), BigInt(4)), g);
  if (fcmp(f, thr) < 0) {
    f.e2 += 1;
    k -= 1;
  }
  // ln f = 2 atanh(u), u = (f-1)/(f+1), |u| <= 1/5
  BigFloat one = BigFloat::from_int(1);
  BigFloat u = fdiv(fsub(f, one), fadd(f, one), g);
  BigFloat u2 = fmul(u, u).rounded(g);
  BigFloat sum, pw = u;
  for (long long j = 0;; ++j) {
    BigFloat term = fdiv_int(pw, 2 * j + 1, g);
    sum = fadd(sum, term).rounded(g);
    if (fbelow_pow2(term, g + 4)) break;
    pw = fmul(pw, u2).rounded(g);
  }
  BigFloat lnf = fmul_int(sum, 2);
  BigFloat result = fadd(lnf, fmul_int(ln2_const(g), k));
  return result.rounded(prec);
}

inline BigFloat fpow_int(const BigFloat& x, long long e, long prec) {
  long g = prec + 32;
  if (e == 0) return BigFloat::from_int(1);
  bool inv = e < 0;
  unsigned long long n = inv ? static_cast<unsigned long long>(-e)
                             : static_cast<unsigned long long>(e);
  BigFloat r = BigFloat::from_int(1), b = x;
  while (n != 0) {
    if (n & 1ULL) r = fmul(r, b).rounded(g);
    b = fmul(b, b).rounded(g);
    n >>= 1;
  }
  if (inv) r = fdiv(BigFloat::from_int(1), r, g);
  return r.rounded(prec);
}

// x^e for rational e; integer and half-integer exponents avoid exp/ln
inline BigFloat fpow(const BigFloat& x, const Rational& e, long prec) {
  long g = prec + 32;
  if (e.is_zero()) return BigFloat::from_int(1);
  if (x.is_zero()) {
    if (e.sign() < 0) throw std::domain_error("BigFloat: 0^negative");
    return BigFloat();
  }
  if (e.is_integer()) return fpow_int(x, e.num().to_longlong(), prec);
  if (e.den() == BigInt(2)) {
    BigFloat root = fsqrt(x, g);
    return fpow_int(root, e.num().to_longlong(), prec);
  }
  if (x.sign() < 0) throw std::domain_error("BigFloat: negative base with non-integer exponent");
  BigFloat lx = fln(x, g + 16);
  return fexp(fmul(lx, from_rational(e, g)).rounded(g), prec);
}

namespace detail {

// exact Bernoulli numbers B_0, B_1, ... (B_1 = -1/2 convention)
inline const Rational& bernoulli(size_t n) {
  thread_local std::vector<Rational> B;
  if (B.empty()) B = {Rational(1)};
  while (B.size() <= n) {
    size_t m = B.size();
    Rational acc(0);
    for (size_t j = 0; j < m; ++j)
      acc += Rational(binomial(static_cast<long long>(m + 1), static_cast<long long>(j))) * B[j];
    B.push_back(-acc / Rational(static_cast<long long>(m + 1)));
  }
  return B[n];
}

}  // namespace detail

// Gamma(x) for rational x > 0
inline BigFloat gamma_rational(const Rational& x, long prec) {
  if (x.sign() <= 0) throw std::domain_error("gamma: requires positive argument");
  long g = prec + 64;

  if (x.is_integer()) {
    long long n = x.num().to_longlong();
    if (n > 100000) throw std::domain_error("gamma: integer argument too large");
    return BigFloat(factorial(static_cast<unsigned>(n - 1)), 0).rounded(prec);
  }
  if (x.den() == BigInt(2)) {
    // x = k + 1/2, k >= 0: Gamma = (2k-1)!!/2^k * sqrt(pi)
    long long num = x.num().to_longlong();
    long long k = (num - 1) / 2;
    Rational coef(double_factorial_odd(static_cast<unsigned>(k)),
                  pow_u(BigInt(2), static_cast<unsigned long long>(k)));
    return fmul(from_rational(coef, g), fsqrt(pi_const(g), g)).rounded(prec);
  }

  // shift right so the Stirling tail can reach 2^-g: first omitted term
  // ~ e^(-2 pi z), so z >~ g * ln2 / (2 pi) + margin
  long long z0 = static_cast<long long>(0.1104 * static_cast<double>(g)) + 8;
  long long s = 0;
  Rational z = x;
  while (z < Rational(z0)) {
    z += Rational(1);
    ++s;
  }

  BigFloat zf = from_rational(z, g);
  BigFloat lnz = fln(zf, g);
  // (z - 1/2) ln z - z + ln(2 pi)/2
  BigFloat acc = fmul(from_rational(z - Rational(1, 2), g), lnz).rounded(g);
  acc = fsub(acc, zf);
  BigFloat ln2pi = fadd(ln2_const(g), fln(pi_const(g), g));
  acc = fadd(acc, fdiv_int(ln2pi, 2, g)).rounded(g);
  // + sum B_2k / (2k (2k-1) z^(2k-1))
  Rational zpow = z;  // z^(2k-1)
  Rational z2 = z * z;
  for (long long k = 1; k < 800; ++k) {
    Rational term = detail::bernoulli(static_cast<size_t>(2 * k)) /
                    (Rational(2 * k) * Rational(2 * k - 1) * zpow);
    BigFloat tf = from_rational(term, g);
    acc = fadd(acc, tf).rounded(g);
    if (fbelow_pow2(tf, g + 4)) break;
    zpow *= z2;
  }
  BigFloat gz = fexp(acc, g);
  // Gamma(x) = Gamma(z) / (x (x+1) ... (x+s-1))
  Rational denom(1);
  Rational f = x;
  for (long long i = 0; i < s; ++i) {
    denom *= f;
    f += Rational(1);
  }
  return fdiv(gz, from_rational(denom, g), prec);
}

// E|G|^p = 2^(p/2) Gamma((p+1)/2) / sqrt(pi) for standard Gaussian G, p >= 0
inline BigFloat gaussian_abs_moment_bf(const Rational& p, long prec) {
  if (p.sign() < 0) throw std::domain_error("gaussian_abs_moment: p < 0");
  long g = prec + 32;
  // even integer p: exact (p-1)!! double factorial
  if (p.is_integer() && (p.num() % BigInt(2)).is_zero()) {
    long long n = p.num().to_longlong() / 2;
    return BigFloat(double_factorial_odd(static_cast<unsigned>(n)), 0).rounded(prec);
  }
  BigFloat two_half = fpow(BigFloat::from_int(2), p / Rational(2), g);
  BigFloat gam = gamma_rational((p + Rational(1)) / Rational(2), g);
  BigFloat sp = fsqrt(pi_const(g), g);
  return fdiv(fmul(two_half, gam), sp, prec);
}

// exp of an exact rational argument
inline BigFloat fexp_rational(const Rational& x, long prec) {
  if (x.is_zero()) return BigFloat::from_int(1);
  return fexp(from_rational(x, prec + 32), prec);
}

}  // namespace typel
