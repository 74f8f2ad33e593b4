// bigfloat.hpp - arbitrary-precision binary floating point.
//
// Value = man * 2^e2 with a BigInt mantissa. Addition, subtraction and
// multiplication are exact (the mantissa grows); rounding is explicit via
// rounded(prec) and the precision-taking operations (div, sqrt). Long
// accumulations must round intermediates themselves, which keeps error
// control visible at the call site.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "typel/bigint.hpp"
#include "typel/rational.hpp"

namespace typel {

struct BigFloat {
  BigInt man;
  long long e2 = 0;

  BigFloat() = default;
  explicit BigFloat(const BigInt& m, long long e = 0) : man(m), e2(e) { strip(); }
  static BigFloat from_int(long long v) { return BigFloat(BigInt(v), 0); }

  bool is_zero() const { return man.is_zero(); }
  int sign() const { return man.sign(); }

  // exponent of the leading bit: |x| in [2^(k-1), 2^k); 0 mantissa -> LLONG_MIN
  long long mag_exponent() const {
    if (man.is_zero()) return -(1LL << 62);
    return e2 + static_cast<long long>(man.bit_length());
  }

  // drop trailing zero bits of the mantissa
  void strip() {
    if (man.is_zero()) {
      e2 = 0;
      return;
    }
    size_t t = man.trailing_zero_bits();
    if (t != 0) {
      man = man.shr(t);
      e2 += static_cast<long long>(t);
    }
  }

  // truncate the mantissa to at most prec bits (round toward zero)
  BigFloat rounded(long prec) const {
    if (man.is_zero()) return *this;
    long long excess = static_cast<long long>(man.bit_length()) - prec;
    if (excess <= 0) return *this;
    BigFloat r;
    r.man = man.shr(static_cast<size_t>(excess));
    r.e2 = e2 + excess;
    r.strip();
    return r;
  }

  BigFloat operator-() const {
    BigFloat r = *this;
    r.man = -r.man;
    return r;
  }
  BigFloat abs() const {
    BigFloat r = *this;
    r.man = r.man.abs();
    return r;
  }

  double to_double() const {
    if (man.is_zero()) return 0.0;
    double m = man.to_double();
    return m * std::ldexp(1.0, static_cast<int>(std::max<long long>(
                                   std::min<long long>(e2, 4000), -4000)));
  }
};

inline BigFloat fadd(const BigFloat& a, const BigFloat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const BigFloat& lo = a.e2 <= b.e2 ? a : b;
  const BigFloat& hi = a.e2 <= b.e2 ? b : a;
  size_t shift = static_cast<size_t>(hi.e2 - lo.e2);
  if (shift > (1u << 24))
    throw std::overflow_error("BigFloat: exponent gap too large for exact add");
  BigFloat r;
  r.man = hi.man.shl(shift) + lo.man;
  r.e2 = lo.e2;
  r.strip();
  return r;
}

inline BigFloat fsub(const BigFloat& a, const BigFloat& b) { return fadd(a, -b); }

inline BigFloat fmul(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  r.man = a.man * b.man;
  r.e2 = a.e2 + b.e2;
  r.strip();
  return r;
}

inline BigFloat fmul_int(const BigFloat& a, long long k) {
  BigFloat r;
  r.man = a.man * BigInt(k);
  r.e2 = a.e2;
  r.strip();
  return r;
}

inline int fcmp(const BigFloat& a, const BigFloat& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
  return fsub(a, b).sign();
}

inline BigFloat fdiv(const BigFloat& a, const BigFloat& b, long prec) {
  if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
  if (a.is_zero()) return BigFloat();
  long long scale = prec + 2 + static_cast<long long>(b.man.bit_length()) -
                    static_cast<long long>(a.man.bit_length());
  if (scale < 0) scale = 0;
  BigInt q = a.man.shl(static_cast<size_t>(scale)) / b.man;
  BigFloat r;
  r.man = q;
  r.e2 = a.e2 - b.e2 - scale;
  r.strip();
  return r.rounded(prec);
}

inline BigFloat fdiv_int(const BigFloat& a, long long k, long prec) {
  return fdiv(a, BigFloat::from_int(k), prec);
}

inline BigFloat from_rational(const Rational& x, long prec) {
  if (x.is_zero()) return BigFloat();
  if (x.is_integer()) return BigFloat(x.num(), 0);
  return fdiv(BigFloat(x.num(), 0), BigFloat(x.den(), 0), prec);
}

inline BigFloat fsqrt(const BigFloat& x, long prec) {
  if (x.sign() < 0) throw std::domain_error("BigFloat: sqrt of negative");
  if (x.is_zero()) return BigFloat();
  long long need = 2 * (prec + 4);
  long long have = static_cast<long long>(x.man.bit_length());
  long long scale = need - have;
  if ((scale + x.e2) % 2 != 0) ++scale;  // keep the exponent even
  BigInt m = scale >= 0 ? x.man.shl(static_cast<size_t>(scale))
                        : x.man.shr(static_cast<size_t>(-scale));
  BigFloat r;
  r.man = isqrt(m);
  r.e2 = (x.e2 - scale) / 2;
  r.strip();
  return r.rounded(prec);
}

// |x| < 2^-k  (true also for x = 0)
inline bool fbelow_pow2(const BigFloat& x, long long k) { return x.mag_exponent() < -k; }

// decimal string with `digits` significant digits, normalized scientific
// form "[-]d.ddd...e<exp>"; truncates (deterministic)
inline std::string to_decimal(const BigFloat& x, int digits) {
  if (digits < 1) digits = 1;
  if (x.is_zero()) return "0";
  BigInt m = x.man.abs();
  long long e2 = x.e2;
  // decimal exponent estimate: floor(log10 |x|)
  long long bits = static_cast<long long>(m.bit_length()) + e2;
  long long d10 = static_cast<long long>(std::floor(static_cast<double>(bits) * 0.30102999566398119));
  // target integer: trunc(|x| * 10^(digits-1-d10)); adjust k until it has
  // exactly `digits` digits
  auto scaled = [&](long long k) {
    BigInt num = m, den(1);
    if (k >= 0)
      num = num * pow_u(BigInt(10), static_cast<unsigned long long>(k));
    else
      den = pow_u(BigInt(10), static_cast<unsigned long long>(-k));
    if (e2 >= 0)
      num = num.shl(static_cast<size_t>(e2));
    else
      den = den.shl(static_cast<size_t>(-e2));
    return num / den;
  };
  long long k = digits - 1 - d10;
  BigInt digitsInt = scaled(k);
  std::string s = digitsInt.to_string();
  while (static_cast<int>(s.size()) > digits) {
    ++d10;
    --k;
    digitsInt = scaled(k);
    s = digitsInt.to_string();
  }
  while (static_cast<int>(s.size()) < digits) {
    --d10;
    ++k;
    digitsInt = scaled(k);
    s = digitsInt.to_string();
  }
  std::string out = x.sign() < 0 ? "-" : "";
  out += s.substr(0, 1);
  if (digits > 1) out += "." + s.substr(1);
  out += "e" + std::to_string(d10);
  return out;
}

}  // namespace typel
