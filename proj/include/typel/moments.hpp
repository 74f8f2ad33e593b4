// moments.hpp - exact even moments, normalized r-sequences, and the sharp
// even-moment comparison predicate.
//
// For a symmetric random variable X the normalized sequence is
//   r_n = E X^(2n) / E G^(2n),   E G^(2n) = (2n-1)!!,
// and the q-vs-p moment comparison (even 2 <= p <= q) is equivalent to the
// cross-power inequality r_(q/2)^(p/2) <= r_(p/2)^(q/2), which stays in
// rational arithmetic. Log-concavity of (r_n) gives every comparison at
// once, so both checks live here.
//
// Supported law families: symmetric integer lattices given by atom
// probabilities, and laws with moment generating function
// e^(a z^2/2) prod_j (1 + b_j z^2), whose r-sequence is the exact binomial
// convolution r_n = sum_k C(n,k) a^(n-k) sigma_k({2 b_j}) k!.

#pragma once

#include <stdexcept>
#include <vector>

#include "typel/bigfloat.hpp"
#include "typel/bigint.hpp"
#include "typel/rational.hpp"
#include "typel/sequences.hpp"
#include "typel/special.hpp"

namespace typel {

struct MomentSequence {
  std::vector<Rational> m;  // m[n] = E X^(2n), m[0] = 1
  std::vector<Rational> r;  // r[n] = m[n] / (2n-1)!!

  size_t size() const { return m.size(); }
};

inline BigInt gaussian_even_moment(unsigned n) { return double_factorial_odd(n); }

// E|G|^p to `digits` decimal digits; exact at even integer p
inline BigFloat gaussian_abs_moment(const Rational& p, int digits) {
  if (digits <= 0) throw std::invalid_argument("gaussian_abs_moment: precision must be >= 1 digit");
  long prec = static_cast<long>(digits * 3.33) + 16;
  return gaussian_abs_moment_bf(p, prec);
}

inline MomentSequence make_moment_sequence(std::vector<Rational> m) {
  if (m.empty() || m[0] != Rational(1))
    throw std::invalid_argument("MomentSequence: requires m_0 = 1");
  for (const auto& x : m)
    if (x.sign() < 0) throw std::invalid_argument("MomentSequence: negative even moment");
  MomentSequence seq;
  seq.m = std::move(m);
  seq.r.resize(seq.m.size());
  for (size_t n = 0; n < seq.m.size(); ++n)
    seq.r[n] = seq.m[n] / Rational(gaussian_even_moment(static_cast<unsigned>(n)));
  return seq;
}

inline MomentSequence moment_sequence_from_r(std::vector<Rational> r) {
  if (r.empty() || r[0] != Rational(1))
    throw std::invalid_argument("MomentSequence: requires r_0 = 1");
  MomentSequence seq;
  seq.r = std::move(r);
  seq.m.resize(seq.r.size());
  for (size_t n = 0; n < seq.r.size(); ++n)
    seq.m[n] = seq.r[n] * Rational(gaussian_even_moment(static_cast<unsigned>(n)));
  return seq;
}

// symmetric integer lattice: P(X=0) = p[0], P(X=k) = P(X=-k) = p[k]
struct LatticeDistribution {
  std::vector<Rational> p;

  LatticeDistribution() = default;
  explicit LatticeDistribution(std::vector<Rational> probs) : p(std::move(probs)) { validate(); }

  void validate() const {
    if (p.empty()) throw std::invalid_argument("LatticeDistribution: empty");
    Rational total = p[0];
    for (size_t k = 1; k < p.size(); ++k) total += Rational(2) * p[k];
    for (const auto& x : p)
      if (x.sign() < 0) throw std::invalid_argument("LatticeDistribution: negative probability");
    if (total != Rational(1))
      throw std::invalid_argument("LatticeDistribution: p_0 + 2 sum p_k must equal 1");
  }

  // index of the largest atom with positive mass (0 for a point mass at 0)
  size_t top_atom() const {
    for (size_t k = p.size(); k-- > 1;)
      if (!p[k].is_zero()) return k;
    return 0;
  }

  static LatticeDistribution rademacher() {
    return LatticeDistribution({Rational(0), Rational(1, 2)});
  }
  // P(X=0) = 1-beta, P(X=+-1) = beta/2
  static LatticeDistribution three_atom(const Rational& beta) {
    return LatticeDistribution({Rational(1) - beta, beta / Rational(2)});
  }
  // uniform on {-n..-1, 1..n} with an atom at 0 of mass p0
  static LatticeDistribution uniform_pm(size_t n, const Rational& p0) {
    std::vector<Rational> p(n + 1, (Rational(1) - p0) / Rational(2 * static_cast<long long>(n)));
    p[0] = p0;
    return LatticeDistribution(std::move(p));
  }
};

// law with MGF e^(a z^2/2) prod (1 + b_j z^2); variance a + 2 sum b_j
struct GaussPolyLaw {
  Rational a;
  std::vector<Rational> b;

  GaussPolyLaw() : a(1) {}
  GaussPolyLaw(Rational a_, std::vector<Rational> b_) : a(std::move(a_)), b(std::move(b_)) {
    validate();
  }

  void validate() const {
    if (a.sign() <= 0) throw std::invalid_argument("GaussPolyLaw: requires a > 0");
    for (const auto& x : b)
      if (x.sign() < 0) throw std::invalid_argument("GaussPolyLaw: requires b_j >= 0");
  }
  Rational variance() const {
    Rational v = a;
    for (const auto& x : b) v += Rational(2) * x;
    return v;
  }
  Rational sum_b() const {
    Rational s(0);
    for (const auto& x : b) s += x;
    return s;
  }
  static GaussPolyLaw standard_gaussian() { return GaussPolyLaw(Rational(1), {}); }
  static GaussPolyLaw z_b(const Rational& b) { return GaussPolyLaw(Rational(1), {b}); }
};

// m_n = p_0 [n=0] + sum_k 2 p_k k^(2n), exact (0^0 = 1)
inline MomentSequence even_moments_lattice(const LatticeDistribution& d, size_t N) {
  d.validate();
  std::vector<Rational> m(N + 1);
  for (size_t n = 0; n <= N; ++n) {
    Rational acc = n == 0 ? d.p[0] : Rational(0);
    for (size_t k = 1; k < d.p.size(); ++k) {
      if (d.p[k].is_zero()) continue;
      acc += Rational(2) * d.p[k] *
             Rational(pow_u(BigInt(static_cast<long long>(k)), 2 * static_cast<unsigned long long>(n)));
    }
    m[n] = acc;
  }
  return make_moment_sequence(std::move(m));
}

// r_n = sum_k C(n,k) a^(n-k) sigma_k({2 b_j}) k!
inline MomentSequence even_moments_gausspoly(const GaussPolyLaw& law, size_t N) {
  law.validate();
  std::vector<Rational> alphas;
  alphas.reserve(law.b.size());
  for (const auto& bj : law.b) alphas.push_back(Rational(2) * bj);
  auto sigma = elementary_symmetric(alphas, N);
  auto weighted = factorial_weighted(sigma);  // sigma_k k!
  std::vector<Rational> r(N + 1);
  for (size_t n = 0; n <= N; ++n) {
    Rational acc(0);
    for (size_t k = 0; k <= n; ++k)
      acc += rational_binomial(static_cast<long long>(n), static_cast<long long>(k)) *
             law.a.pow(static_cast<long long>(n - k)) * weighted.a[k];
    r[n] = acc;
  }
  return moment_sequence_from_r(std::move(r));
}

// m_{2n}(X+Y) = sum_k C(2n,2k) m_{2k}(X) m_{2(n-k)}(Y); odd cross terms
// vanish by symmetry. Length mismatch truncates to the shorter input.
inline MomentSequence moments_of_independent_sum(const MomentSequence& mx,
                                                 const MomentSequence& my) {
  size_t len = std::min(mx.size(), my.size());
  if (len == 0) throw std::invalid_argument("moments_of_independent_sum: empty sequence");
  std::vector<Rational> m(len);
  for (size_t n = 0; n < len; ++n) {
    Rational acc(0);
    for (size_t k = 0; k <= n; ++k)
      acc += rational_binomial(2 * static_cast<long long>(n), 2 * static_cast<long long>(k)) *
             mx.m[k] * my.m[n - k];
    m[n] = acc;
  }
  return make_moment_sequence(std::move(m));
}

struct RLogConcaveVerdict {
  bool holds = true;
  size_t fail_index = 0;
  bool vacuous = false;  // fewer than 3 entries available

  bool ok() const { return holds; }
};

// first n >= 1 with r_n^2 < r_{n-1} r_{n+1}; a zero followed by a nonzero
// entry fails (contiguous-support convention)
inline RLogConcaveVerdict check_r_logconcave(const MomentSequence& seq) {
  RLogConcaveVerdict v;
  const auto& r = seq.r;
  if (r.size() < 3) {
    v.vacuous = true;
    return v;
  }
  for (size_t n = 1; n + 1 < r.size(); ++n) {
    if (r[n].is_zero() && !r[n + 1].is_zero()) {
      v.holds = false;
      v.fail_index = n;
      return v;
    }
    if (r[n] * r[n] < r[n - 1] * r[n + 1]) {
      v.holds = false;
      v.fail_index = n;
      return v;
    }
  }
  return v;
}

struct MomentComparisonVerdict {
  bool holds = true;
  Rational slack;  // r_{p/2}^{q/2} - r_{q/2}^{p/2}, exact
};

// ||X||_q / ||G||_q <= ||X||_p / ||G||_p for even p <= q, checked as the
// cross-power inequality in exact rationals
inline MomentComparisonVerdict check_moment_comparison(const MomentSequence& seq, long long p,
                                                       long long q) {
  if (p < 2 || q < p || p % 2 != 0 || q % 2 != 0)
    throw std::invalid_argument("check_moment_comparison: requires even 2 <= p <= q");
  size_t qi = static_cast<size_t>(q / 2), pi = static_cast<size_t>(p / 2);
  if (qi >= seq.size())
    throw std::invalid_argument("check_moment_comparison: sequence too short for q");
  MomentComparisonVerdict v;
  Rational lhs = seq.r[qi].pow(p / 2);
  Rational rhs = seq.r[pi].pow(q / 2);
  v.slack = rhs - lhs;
  v.holds = v.slack.sign() >= 0;
  return v;
}

}  // namespace typel
