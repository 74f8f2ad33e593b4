// bigint.hpp - arbitrary-precision signed integers.
//
// Little-endian base-2^32 limbs, schoolbook multiplication and Knuth
// division. Sizes in this project stay in the tens of thousands of bits,
// so no asymptotically fast multiplication is needed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace typel {

class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
      d_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
      u >>= 32;
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(long v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned int v) : BigInt(static_cast<unsigned long long>(v)) {}
  BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
  BigInt(unsigned long long u) {
    if (u == 0) return;
    sign_ = 1;
    while (u != 0) {
      d_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
      u >>= 32;
    }
  }

  static BigInt from_string(std::string_view s) {
    size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sg = -1;
      ++i;
    }
    size_t end = s.size();
    while (end > i && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
    if (i == end) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    for (; i < end; ++i) {
      char c = s[i];
      if (c < '0' || c > '9')
        throw std::invalid_argument(std::string("BigInt: bad digit '") + c + "'");
      r.mul_small_inplace(10);
      r.add_small_inplace(static_cast<uint32_t>(c - '0'));
    }
    r.sign_ = r.d_.empty() ? 0 : sg;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const { return sign_ == 1 && d_.size() == 1 && d_[0] == 1; }

  bool fits_longlong() const {
    if (d_.size() > 2) return false;
    unsigned long long m = magnitude_u64();
    return sign_ >= 0 ? m <= 0x7fffffffffffffffULL : m <= 0x8000000000000000ULL;
  }
  long long to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: to_longlong overflow");
    unsigned long long m = magnitude_u64();
    return sign_ < 0 ? -static_cast<long long>(m - (m == 0x8000000000000000ULL)) -
                           (m == 0x8000000000000000ULL)
                     : static_cast<long long>(m);
  }

  // number of bits of |x|; 0 for x = 0
  size_t bit_length() const {
    if (d_.empty()) return 0;
    uint32_t top = d_.back();
    size_t b = d_.size() * 32;
    for (uint32_t probe = 0x80000000u; probe != 0 && !(top & probe); probe >>= 1) --b;
    return b;
  }

  bool bit(size_t i) const {
    size_t limb = i / 32, off = i % 32;
    if (limb >= d_.size()) return false;
    return (d_[limb] >> off) & 1u;
  }

  friend int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a, b);
    return a.sign_ >= 0 ? c : -c;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.d_ = add_mag(a.d_, b.d_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a, b);
      if (c == 0) return BigInt();
      const BigInt& big = c > 0 ? a : b;
      const BigInt& small = c > 0 ? b : a;
      r.d_ = sub_mag(big.d_, small.d_);
      r.sign_ = big.sign_;
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.d_.assign(a.d_.size() + b.d_.size(), 0);
    for (size_t i = 0; i < a.d_.size(); ++i) {
      uint64_t carry = 0;
      uint64_t ai = a.d_[i];
      for (size_t j = 0; j < b.d_.size(); ++j) {
        uint64_t cur = r.d_[i + j] + ai * b.d_[j] + carry;
        r.d_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
      }
      size_t k = i + b.d_.size();
      while (carry != 0) {
        uint64_t cur = r.d_[k] + carry;
        r.d_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  // quotient truncated toward zero; remainder has the dividend's sign
  friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a, b);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    if (b.d_.size() == 1) {
      BigInt qq = a.abs();
      uint32_t rem = qq.divmod_small_inplace(b.d_[0]);
      qq.sign_ = qq.d_.empty() ? 0 : 1;
      q = qq;
      r = BigInt(static_cast<unsigned long long>(rem));
    } else {
      divmod_mag(a.d_, b.d_, q.d_, r.d_);
      q.sign_ = q.d_.empty() ? 0 : 1;
      r.sign_ = r.d_.empty() ? 0 : 1;
    }
    if (a.sign_ * b.sign_ < 0) q.sign_ = -q.sign_;
    if (a.sign_ < 0) r.sign_ = -r.sign_;
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt shl(size_t bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    BigInt r;
    size_t limbs = bits / 32, off = bits % 32;
    r.d_.assign(d_.size() + limbs + 1, 0);
    for (size_t i = 0; i < d_.size(); ++i) {
      uint64_t v = static_cast<uint64_t>(d_[i]) << off;
      r.d_[i + limbs] |= static_cast<uint32_t>(v & 0xffffffffULL);
      r.d_[i + limbs + 1] |= static_cast<uint32_t>(v >> 32);
    }
    r.trim();
    r.sign_ = sign_;
    return r;
  }

  // arithmetic shift of the magnitude (truncation toward zero)
  BigInt shr(size_t bits) const {
    if (sign_ == 0) return *this;
    size_t limbs = bits / 32, off = bits % 32;
    if (limbs >= d_.size()) return BigInt();
    BigInt r;
    r.d_.assign(d_.size() - limbs, 0);
    for (size_t i = 0; i < r.d_.size(); ++i) {
      uint64_t v = d_[i + limbs] >> off;
      if (off != 0 && i + limbs + 1 < d_.size())
        v |= static_cast<uint64_t>(d_[i + limbs + 1]) << (32 - off);
      r.d_[i] = static_cast<uint32_t>(v & 0xffffffffULL);
    }
    r.trim();
    r.sign_ = r.d_.empty() ? 0 : sign_;
    return r;
  }

  // count of trailing zero bits; 0 for zero value
  size_t trailing_zero_bits() const {
    if (d_.empty()) return 0;
    size_t n = 0;
    for (size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] == 0) {
        n += 32;
        continue;
      }
      uint32_t v = d_[i];
      while (!(v & 1u)) {
        ++n;
        v >>= 1;
      }
      break;
    }
    return n;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    BigInt t = abs();
    std::string out;
    std::vector<uint32_t> chunks;
    while (!t.d_.empty()) chunks.push_back(t.divmod_small_inplace(1000000000u));
    out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      out += std::string(9 - part.size(), '0') + part;
    }
    return sign_ < 0 ? "-" + out : out;
  }

  double to_double() const {
    if (sign_ == 0) return 0.0;
    double v = 0.0;
    size_t start = d_.size() > 3 ? d_.size() - 3 : 0;
    for (size_t i = d_.size(); i-- > start;) v = v * 4294967296.0 + d_[i];
    for (size_t i = 0; i < start; ++i) v *= 4294967296.0;
    return sign_ < 0 ? -v : v;
  }

 private:
  int sign_ = 0;
  std::vector<uint32_t> d_;

  unsigned long long magnitude_u64() const {
    unsigned long long m = 0;
    for (size_t i = d_.size(); i-- > 0;) m = (m << 32) | d_[i];
    return m;
  }

  void trim() {
    while (!d_.empty() && d_.back() == 0) d_.pop_back();
    if (d_.empty()) sign_ = 0;
  }

  void mul_small_inplace(uint32_t f) {
    uint64_t carry = 0;
    for (auto& limb : d_) {
      uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
      limb = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    if (carry) d_.push_back(static_cast<uint32_t>(carry));
  }

  void add_small_inplace(uint32_t v) {
    uint64_t carry = v;
    for (size_t i = 0; carry != 0 && i < d_.size(); ++i) {
      uint64_t cur = d_[i] + carry;
      d_[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    if (carry) d_.push_back(static_cast<uint32_t>(carry));
  }

  // divides |*this| in place, returns remainder; requires d != 0
  uint32_t divmod_small_inplace(uint32_t dsmall) {
    uint64_t rem = 0;
    for (size_t i = d_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | d_[i];
      d_[i] = static_cast<uint32_t>(cur / dsmall);
      rem = cur % dsmall;
    }
    trim();
    return static_cast<uint32_t>(rem);
  }

  static int cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size() ? -1 : 1;
    for (size_t i = a.d_.size(); i-- > 0;)
      if (a.d_[i] != b.d_[i]) return a.d_[i] < b.d_[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
      r[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    r[big.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
      if (cur < 0) {
        cur += 0x100000000LL;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on magnitudes; requires |u| >= |v|, v.size() >= 2
  static void divmod_mag(const std::vector<uint32_t>& u_in, const std::vector<uint32_t>& v_in,
                         std::vector<uint32_t>& q_out, std::vector<uint32_t>& r_out) {
    size_t n = v_in.size(), m = u_in.size() - n;
    int shift = 0;
    for (uint32_t top = v_in.back(); !(top & 0x80000000u); top <<= 1) ++shift;

    std::vector<uint32_t> v(n), u(u_in.size() + 1, 0);
    for (size_t i = n; i-- > 0;) {
      uint64_t x = static_cast<uint64_t>(v_in[i]) << shift;
      if (shift && i > 0) x |= v_in[i - 1] >> (32 - shift);
      v[i] = static_cast<uint32_t>(x & 0xffffffffULL);
    }
    for (size_t i = u_in.size(); i-- > 0;) {
      uint64_t x = static_cast<uint64_t>(u_in[i]) << shift;
      if (shift && i > 0) x |= u_in[i - 1] >> (32 - shift);
      u[i] |= static_cast<uint32_t>(x & 0xffffffffULL);
      u[i + 1] |= static_cast<uint32_t>(x >> 32);
    }

    q_out.assign(m + 1, 0);
    const uint64_t B = 0x100000000ULL;
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t top2 = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = top2 / v[n - 1];
      uint64_t rhat = top2 % v[n - 1];
      while (qhat >= B ||
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= B) break;
      }
      // multiply-subtract
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
        if (t < 0) {
          t += B;
          borrow = 1;
        } else {
          borrow = 0;
        }
        u[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
      if (t < 0) {
        // add back
        --qhat;
        uint64_t carry2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + carry2;
          u[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
          carry2 = cur >> 32;
        }
        t += static_cast<int64_t>(carry2);
      }
      u[j + n] = static_cast<uint32_t>(t);
      q_out[j] = static_cast<uint32_t>(qhat);
    }

    while (!q_out.empty() && q_out.back() == 0) q_out.pop_back();
    r_out.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      uint64_t x = u[i] >> shift;
      if (shift && i + 1 < u.size()) x |= static_cast<uint64_t>(u[i + 1]) << (32 - shift);
      r_out[i] = static_cast<uint32_t>(x & 0xffffffffULL);
    }
    while (!r_out.empty() && r_out.back() == 0) r_out.pop_back();
  }
};

inline BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  return (a / gcd(a, b)) * b;
}

inline BigInt pow_u(const BigInt& base, unsigned long long e) {
  BigInt r(1), b = base;
  while (e != 0) {
    if (e & 1ULL) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// floor square root; requires x >= 0
inline BigInt isqrt(const BigInt& x) {
  if (x.sign() < 0) throw std::domain_error("isqrt: negative argument");
  if (x.is_zero()) return BigInt();
  size_t bl = x.bit_length();
  BigInt g = BigInt(1).shl(bl / 2 + 1);
  for (;;) {
    BigInt n = (g + x / g).shr(1);
    if (n >= g) break;
    g = n;
  }
  if (g * g > x) g = g - BigInt(1);
  return g;
}

inline BigInt factorial(unsigned n) {
  BigInt r(1);
  for (unsigned k = 2; k <= n; ++k) r *= BigInt(static_cast<long long>(k));
  return r;
}

// (2n-1)!! with (-1)!! = 1
inline BigInt double_factorial_odd(unsigned n) {
  BigInt r(1);
  for (unsigned k = 1; k <= n; ++k) r *= BigInt(static_cast<long long>(2 * k - 1));
  return r;
}

// C(n,k) = 0 outside 0 <= k <= n (the usual convention)
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return BigInt();
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long long i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r = r / BigInt(i);
  }
  return r;
}

}  // namespace typel
