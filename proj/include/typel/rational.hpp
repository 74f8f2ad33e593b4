// rational.hpp - exact rational arithmetic over BigInt.
//
// Always normalized: den > 0, gcd(num, den) = 1, zero is 0/1.
// Parsing accepts "p", "-p", "p/q"; decimal points and exponents are
// rejected so exact inputs stay exact.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "typel/bigint.hpp"

namespace typel {

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(const BigInt& n) : num_(n), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static Rational parse(std::string_view s) {
    for (char c : s)
      if (c == '.' || c == 'e' || c == 'E')
        throw std::invalid_argument("Rational: floats are not accepted, use p/q");
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    BigInt n = BigInt::from_string(s.substr(0, slash));
    BigInt d = BigInt::from_string(s.substr(slash + 1));
    if (d.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    return Rational(std::move(n), std::move(d));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend int cmp(const Rational& a, const Rational& b) {
    return cmp(a.num_ * b.den_, b.num_ * a.den_);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational pow(long long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rational: 0^negative");
      return Rational(pow_u(den_, static_cast<unsigned long long>(-e)),
                      pow_u(num_, static_cast<unsigned long long>(-e)));
    }
    return Rational(pow_u(num_, static_cast<unsigned long long>(e)),
                    pow_u(den_, static_cast<unsigned long long>(e)));
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  double to_double() const {
    // scale so the quotient keeps ~60 significant bits
    long long shift = static_cast<long long>(num_.bit_length()) -
                      static_cast<long long>(den_.bit_length());
    long long extra = 64 - shift;
    BigInt scaled = extra > 0 ? num_.shl(static_cast<size_t>(extra)) : num_;
    BigInt q = scaled / den_;
    double v = q.to_double();
    if (extra > 0) {
      for (long long i = 0; i < extra; ++i) v *= 0.5;
    }
    return v;
  }

  // ~80 significant bits, for extended-precision numerics
  long double to_long_double() const {
    if (is_zero()) return 0.0L;
    long long shift = static_cast<long long>(num_.bit_length()) -
                      static_cast<long long>(den_.bit_length());
    long long extra = 96 - shift;
    BigInt scaled = extra > 0 ? num_.shl(static_cast<size_t>(extra))
                              : num_.shr(static_cast<size_t>(-extra));
    BigInt q = scaled / den_;  // 95..97 bits
    size_t bl = q.bit_length();
    size_t cut = bl > 48 ? bl - 48 : 0;
    BigInt hi = q.shr(cut);
    BigInt lo = q - hi.shl(cut);
    long double v = std::ldexp(static_cast<long double>(hi.to_double()), static_cast<int>(cut)) +
                    static_cast<long double>(lo.to_double());
    return std::ldexp(v, static_cast<int>(-extra));
  }

 private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

inline Rational rational_binomial(long long n, long long k) { return Rational(binomial(n, k)); }

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace typel
