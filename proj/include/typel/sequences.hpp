// sequences.hpp - log-concave sequence algebra, all in exact rationals.
//
// Elementary symmetric functions, Newton's inequalities, binomial
// convolution (Walkup), the factorial-weighted sequence (sigma_k k!), the
// EGF log-concavity certificate, and the coefficient identity behind the
// elementary proof that log-concave coefficient sequences give log-concave
// EGFs on the positive half-line (including the folded sign sequence s_k
// and the nondecreasing-pairing inequality).

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "typel/bigint.hpp"
#include "typel/polynomial.hpp"
#include "typel/rational.hpp"

namespace typel {

struct NonnegSequence {
  std::vector<Rational> a;

  NonnegSequence() = default;
  explicit NonnegSequence(std::vector<Rational> v) : a(std::move(v)) {
    for (const auto& x : a)
      if (x.sign() < 0) throw std::invalid_argument("NonnegSequence: negative entry");
  }
  size_t size() const { return a.size(); }
};

struct SignSequence {
  std::vector<Rational> s;
  std::vector<Rational> b;  // companion nondecreasing list, set by the caller
};

struct LogConcavityVerdict {
  enum Kind { holds, fails_at, support_gap_at } kind = holds;
  size_t index = 0;
  bool vacuous = false;  // fewer than 3 entries

  bool ok() const { return kind == holds; }
};

// sigma_0..sigma_K of prod (1 + alpha_j t); sigma_k = 0 for k beyond the
// number of parameters
inline std::vector<Rational> elementary_symmetric(const std::vector<Rational>& alphas, size_t K) {
  std::vector<Rational> sigma(K + 1, Rational(0));
  sigma[0] = Rational(1);
  size_t filled = 0;
  for (const auto& alpha : alphas) {
    if (alpha.sign() < 0) throw std::invalid_argument("elementary_symmetric: negative parameter");
    filled = std::min(filled + 1, K);
    for (size_t k = filled; k >= 1; --k) sigma[k] += sigma[k - 1] * alpha;
  }
  return sigma;
}

struct NewtonVerdict {
  bool all_hold = true;
  size_t first_failure = 0;
  Rational worst_slack;  // min over k of lhs - rhs
  bool any_checked = false;
};

// Newton's inequalities (sigma_k / C(n,k))^2 >= (sigma_{k-1}/C(n,k-1)) (sigma_{k+1}/C(n,k+1)),
// checked for 1 <= k <= n-1 with n = alphas.size()
inline NewtonVerdict newton_check(const std::vector<Rational>& alphas) {
  size_t n = alphas.size();
  NewtonVerdict v;
  if (n < 2) return v;
  auto sigma = elementary_symmetric(alphas, n);
  for (size_t k = 1; k <= n - 1; ++k) {
    Rational lhs = (sigma[k] / rational_binomial(n, k)).pow(2);
    Rational rhs = (sigma[k - 1] / rational_binomial(n, k - 1)) *
                   (sigma[k + 1] / rational_binomial(n, k + 1));
    Rational slack = lhs - rhs;
    if (!v.any_checked || slack < v.worst_slack) v.worst_slack = slack;
    v.any_checked = true;
    if (slack.sign() < 0 && v.all_hold) {
      v.all_hold = false;
      v.first_failure = k;
    }
  }
  return v;
}

// a_n^2 >= a_{n-1} a_{n+1} plus contiguous support
inline LogConcavityVerdict logconcave_check(const NonnegSequence& seq) {
  LogConcavityVerdict v;
  const auto& a = seq.a;
  if (a.size() < 3) {
    v.vacuous = true;
    // still scan for support gaps on what is there
  }
  // support must be one contiguous block
  size_t first = a.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) {
      first = i;
      break;
    }
  bool in_zero_tail = false;
  for (size_t i = first; i < a.size(); ++i) {
    if (a[i].is_zero())
      in_zero_tail = true;
    else if (in_zero_tail) {
      v.kind = LogConcavityVerdict::support_gap_at;
      v.index = i - 1;
      return v;
    }
  }
  for (size_t n = 1; n + 1 < a.size(); ++n) {
    if (a[n] * a[n] < a[n - 1] * a[n + 1]) {
      v.kind = LogConcavityVerdict::fails_at;
      v.index = n;
      return v;
    }
  }
  return v;
}

// derived inequalities a_k a_l >= a_{k+j} a_{l-j}, k >= l, 0 <= j <= l
inline bool logconcave_derived_pairs(const NonnegSequence& seq) {
  const auto& a = seq.a;
  for (size_t k = 0; k < a.size(); ++k)
    for (size_t l = 0; l <= k; ++l)
      for (size_t j = 0; j <= l; ++j) {
        if (k + j >= a.size()) continue;
        if (a[k] * a[l] < a[k + j] * a[l - j]) return false;
      }
  return true;
}

inline NonnegSequence factorial_weighted(const std::vector<Rational>& sigma) {
  std::vector<Rational> out(sigma.size());
  BigInt f(1);
  for (size_t k = 0; k < sigma.size(); ++k) {
    if (k > 0) f *= BigInt(static_cast<long long>(k));
    out[k] = sigma[k] * Rational(f);
  }
  return NonnegSequence(std::move(out));
}

// c_n = sum_k C(n,k) x_k y_{n-k}
inline NonnegSequence binomial_convolution(const NonnegSequence& x, const NonnegSequence& y) {
  if (x.a.empty() || y.a.empty()) return NonnegSequence();
  std::vector<Rational> c(x.a.size() + y.a.size() - 1, Rational(0));
  for (size_t n = 0; n < c.size(); ++n)
    for (size_t k = 0; k < x.a.size(); ++k) {
      if (n < k || n - k >= y.a.size()) continue;
      c[n] += rational_binomial(static_cast<long long>(n), static_cast<long long>(k)) *
              x.a[k] * y.a[n - k];
    }
  return NonnegSequence(std::move(c));
}

struct EgfGridVerdict {
  bool certified = true;
  size_t failed_index = 0;                 // into the grid
  std::vector<Rational> values;            // (f')^2 - f f'' at each grid point, exact
};

// f(t) = sum a_n t^n / n! for the finite sequence a; the evaluation is an
// exact rational polynomial computation, so the certificate needs no tail
// bound. `shift` checks f^(shift) via the shifted sequence.
inline EgfGridVerdict egf_logconcavity_grid(const NonnegSequence& a,
                                            const std::vector<Rational>& grid,
                                            size_t shift = 0) {
  std::vector<Rational> w(a.a.begin() + std::min(shift, a.a.size()), a.a.end());
  RatPoly f;
  f.c.resize(w.size());
  BigInt fact(1);
  for (size_t n = 0; n < w.size(); ++n) {
    if (n > 0) fact *= BigInt(static_cast<long long>(n));
    f.c[n] = w[n] / Rational(fact);
  }
  f.trim();
  RatPoly fp = f.derivative();
  RatPoly fpp = fp.derivative();
  RatPoly disc = fp * fp - f * fpp;
  EgfGridVerdict v;
  v.values.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    Rational val = disc.eval(grid[i]);
    v.values.push_back(val);
    if (val.sign() < 0 && v.certified) {
      v.certified = false;
      v.failed_index = i;
    }
  }
  return v;
}

// sum over k of (C(n,k-1) - C(n,k)) a_k a_{n-k+2}; nonnegative whenever a
// is log-concave
inline Rational gurvits_coefficient_check(const NonnegSequence& a, long long n) {
  if (n < 0) throw std::invalid_argument("gurvits_coefficient_check: n < 0");
  Rational acc(0);
  long long len = static_cast<long long>(a.a.size());
  for (long long k = 0; k < len; ++k) {
    long long other = n - k + 2;
    if (other < 0 || other >= len) continue;
    Rational w = Rational(binomial(n, k - 1)) - Rational(binomial(n, k));
    if (w.is_zero()) continue;
    acc += w * a.a[static_cast<size_t>(k)] * a.a[static_cast<size_t>(other)];
  }
  return acc;
}

// the parabola criterion: s_k <= 0 iff -4k^2 + 4kn + 8k - n^2 - 3n - 2 <= 0
// (valid for n >= 2)
inline bool sk_parabola_nonpositive(long long n, long long k) {
  long long val = -4 * k * k + 4 * k * n + 8 * k - n * n - 3 * n - 2;
  return val <= 0;
}

// folded sign sequence of the coefficient identity, k = 0..m, m = floor(n/2 + 1):
// s_k = 2 C(n,k-1) - C(n,k) - C(n,k-2) for k < n/2 + 1, plus the middle
// term C(n,n/2) - C(n,n/2-1) when n is even. Sums to zero with
// nondecreasing signs.
inline SignSequence sk_sequence(long long n) {
  if (n < 2) throw std::invalid_argument("sk_sequence: requires n >= 2");
  long long m = n / 2 + 1;  // floor(n/2 + 1)
  SignSequence out;
  out.s.resize(static_cast<size_t>(m) + 1);
  for (long long k = 0; k <= m; ++k) {
    bool is_middle = (n % 2 == 0) && (k == m);
    if (is_middle)
      out.s[static_cast<size_t>(k)] =
          Rational(binomial(n, n / 2)) - Rational(binomial(n, n / 2 - 1));
    else
      out.s[static_cast<size_t>(k)] = Rational(2) * Rational(binomial(n, k - 1)) -
                                      Rational(binomial(n, k)) - Rational(binomial(n, k - 2));
  }
  return out;
}

// sum s_k b_k for b nondecreasing, sum s_k = 0, sgn(s_k) nondecreasing;
// the hypotheses are verified and a violation names the failed one
inline Rational sign_pairing_inequality(const SignSequence& ss) {
  if (ss.s.size() != ss.b.size())
    throw std::invalid_argument("sign_pairing_inequality: length mismatch");
  for (size_t i = 1; i < ss.b.size(); ++i)
    if (ss.b[i] < ss.b[i - 1])
      throw std::invalid_argument("sign_pairing_inequality: b is not nondecreasing");
  Rational total(0);
  for (const auto& s : ss.s) total += s;
  if (!total.is_zero())
    throw std::invalid_argument("sign_pairing_inequality: sum of s is not zero");
  int prev = -2;
  for (const auto& s : ss.s) {
    int sg = s.sign();
    if (sg == 0) continue;
    if (prev != -2 && sg < prev)
      throw std::invalid_argument("sign_pairing_inequality: sgn(s) is not nondecreasing");
    prev = sg;
  }
  Rational acc(0);
  for (size_t i = 0; i < ss.s.size(); ++i) acc += ss.s[i] * ss.b[i];
  return acc;
}

}  // namespace typel
