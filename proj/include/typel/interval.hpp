// interval.hpp - midpoint-radius validated arithmetic over BigFloat.
//
// Every operation returns an enclosure of the exact result: midpoints are
// rounded to the working precision and the rounding error is added to the
// radius exactly. A comparison is decided only when the enclosures
// separate, so any decided sign is a theorem about the exact inputs;
// otherwise the sign is reported indeterminate and the caller escalates
// precision or declares the case degenerate.

#pragma once

#include <optional>
#include <stdexcept>

#include "typel/bigfloat.hpp"
#include "typel/rational.hpp"
#include "typel/special.hpp"

namespace typel {

struct IFloat {
  BigFloat mid;
  BigFloat rad;  // >= 0; the exact value lies in [mid - rad, mid + rad]

  IFloat() = default;
  explicit IFloat(const BigFloat& m) : mid(m) {}
  IFloat(const BigFloat& m, const BigFloat& r) : mid(m), rad(r) {}

  static IFloat exact_int(long long v) { return IFloat(BigFloat::from_int(v)); }

  bool is_exact_zero() const { return mid.is_zero() && rad.is_zero(); }

  // shrink the midpoint to prec bits, absorbing the truncation into rad
  IFloat compressed(long prec) const {
    BigFloat m2 = mid.rounded(prec);
    BigFloat err = fsub(mid, m2).abs();
    BigFloat r2 = fadd(rad, err);
    // cap the radius mantissa too (round up by one ulp)
    if (static_cast<long>(r2.man.bit_length()) > prec) {
      BigFloat r3 = r2.rounded(32);
      r3 = fadd(r3, BigFloat(BigInt(1), r3.e2));  // ulp bump keeps it an upper bound
      r2 = r3;
    }
    return IFloat(m2, r2);
  }

  // +1 / -1 when the enclosure separates from zero, 0 when exactly zero,
  // nullopt when undecidable at this radius
  std::optional<int> certain_sign() const {
    if (rad.is_zero()) return mid.sign();
    if (mid.sign() > 0 && fcmp(mid, rad) > 0) return 1;
    if (mid.sign() < 0 && fcmp(mid.abs(), rad) > 0) return -1;
    return std::nullopt;
  }
};

inline IFloat from_rational_i(const Rational& x, long prec) {
  BigFloat m = from_rational(x, prec);
  // exact when the reduced denominator is a power of two
  BigInt den = x.den();
  size_t tz = den.trailing_zero_bits();
  bool dyadic = den.shr(tz).is_one();
  if (dyadic) return IFloat(m);
  return IFloat(m, BigFloat(BigInt(2), m.e2));
}

inline IFloat iadd(const IFloat& a, const IFloat& b, long prec) {
  return IFloat(fadd(a.mid, b.mid), fadd(a.rad, b.rad)).compressed(prec);
}

inline IFloat ineg(const IFloat& a) { return IFloat(-a.mid, a.rad); }

inline IFloat isub(const IFloat& a, const IFloat& b, long prec) { return iadd(a, ineg(b), prec); }

inline IFloat imul(const IFloat& a, const IFloat& b, long prec) {
  BigFloat m = fmul(a.mid, b.mid);
  BigFloat r = fadd(fadd(fmul(a.mid.abs(), b.rad), fmul(b.mid.abs(), a.rad)),
                    fmul(a.rad, b.rad));
  return IFloat(m, r).compressed(prec);
}

inline IFloat imul_rat(const IFloat& a, const Rational& c, long prec) {
  return imul(a, from_rational_i(c, prec), prec);
}

inline IFloat iabs(const IFloat& a) { return IFloat(a.mid.abs(), a.rad); }

// requires the divisor to be separated from zero
inline IFloat idiv(const IFloat& a, const IFloat& b, long prec) {
  auto sb = b.certain_sign();
  if (!sb || *sb == 0) throw std::domain_error("IFloat: division by possibly-zero interval");
  BigFloat m = fdiv(a.mid, b.mid, prec + 8);
  // |a/b - m| <= (ra + |m| rb) / (|b| - rb) + truncation of the quotient
  BigFloat blo = fsub(b.mid.abs(), b.rad);
  BigFloat num = fadd(a.rad, fmul(m.abs(), b.rad));
  BigFloat r;
  if (!num.is_zero()) {
    r = fdiv(num, blo, 32);
    r = fadd(r, BigFloat(BigInt(2), r.e2));  // outward bump after truncation
  }
  // quotient rounding slack: fdiv truncates at prec+8 significant bits
  if (!m.is_zero()) r = fadd(r, BigFloat(BigInt(4), m.mag_exponent() - prec - 8));
  return IFloat(m, r).compressed(prec);
}

// exp over an interval: exp(mid) with radius exp(mid)(e^rad - 1) plus the
// evaluation error; requires rad <= 1
inline IFloat iexp(const IFloat& a, long prec) {
  BigFloat m = fexp(a.mid, prec + 8);
  BigFloat r;
  if (!a.rad.is_zero()) {
    if (a.rad.mag_exponent() > 0)
      throw std::domain_error("IFloat: exp radius too large to propagate");
    r = fmul(m, fmul_int(a.rad, 2)).rounded(32);  // e^t - 1 <= 2t on [0,1]
    r = fadd(r, BigFloat(BigInt(2), r.e2));
  }
  // evaluation slack: fexp is correct to a few ulps at prec+8
  r = fadd(r, BigFloat(BigInt(8), m.mag_exponent() - prec - 8));
  return IFloat(m, r).compressed(prec);
}

inline std::optional<int> icmp(const IFloat& a, const IFloat& b, long prec) {
  return isub(a, b, prec).certain_sign();
}

}  // namespace typel
