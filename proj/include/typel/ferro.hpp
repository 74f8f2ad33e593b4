// ferro.hpp - exact-enumeration ferromagnetic spin systems.
//
// A system is a finite product of symmetric site measures reweighted by
// exp(sum h_j x_j + sum_{j,k} J_{jk} x_j x_k) / Z with h, J >= 0. The
// quadratic form runs over all ordered pairs including j = k; J is not
// symmetrized (the law only depends on J + J^T, a symmetrize utility is
// provided). exp forces approximate arithmetic, so enumeration carries
// validated intervals: every reported bound is rigorous at the chosen
// precision and verdicts degrade to "inconclusive-by-precision" instead of
// guessing.
//
// The ghost transform trades the field h for couplings to an auxiliary
// Rademacher site: (eps, eps X_1, ..., eps X_n) has law of the same form
// with h' = 0, J'_{0k} = J'_{k0} = h_k/2. Positive integer combinations
// S = sum a_j X_j then have partition-function zeros on the unit circle in
// e^z, which lee_yang_polynomial materializes for the numeric root check.

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "typel/interval.hpp"
#include "typel/moments.hpp"
#include "typel/roots.hpp"

namespace typel {

struct SiteMeasure {
  // (value, weight) atoms; symmetric under value -> -value
  std::vector<std::pair<Rational, Rational>> atoms;

  void validate() const {
    if (atoms.empty()) throw std::invalid_argument("SiteMeasure: empty support");
    for (const auto& [v, w] : atoms) {
      if (w.sign() <= 0) throw std::invalid_argument("SiteMeasure: weights must be positive");
      bool mirrored = false;
      for (const auto& [v2, w2] : atoms)
        if (v2 == -v && w2 == w) mirrored = true;
      if (!mirrored) throw std::invalid_argument("SiteMeasure: not symmetric");
    }
  }

  bool integer_support() const {
    for (const auto& [v, w] : atoms)
      if (!v.is_integer()) return false;
    return true;
  }

  static SiteMeasure rademacher() {
    return SiteMeasure{{{Rational(1), Rational(1, 2)}, {Rational(-1), Rational(1, 2)}}};
  }
  static SiteMeasure three_atoms(const Rational& p0) {
    Rational side = (Rational(1) - p0) / Rational(2);
    return SiteMeasure{{{Rational(-1), side}, {Rational(0), p0}, {Rational(1), side}}};
  }
};

struct SpinSystem {
  std::vector<SiteMeasure> sites;
  std::vector<std::vector<Rational>> J;  // n x n, nonnegative
  std::vector<Rational> h;               // nonnegative
  size_t enumeration_cap = 2000000;

  size_t size() const { return sites.size(); }

  void validate() const {
    size_t n = sites.size();
    if (n == 0) throw std::invalid_argument("SpinSystem: no sites");
    if (J.size() != n || h.size() != n)
      throw std::invalid_argument("SpinSystem: J/h dimension mismatch");
    for (const auto& row : J) {
      if (row.size() != n) throw std::invalid_argument("SpinSystem: J is not square");
      for (const auto& x : row)
        if (x.sign() < 0) throw std::invalid_argument("SpinSystem: J must be nonnegative");
    }
    for (const auto& x : h)
      if (x.sign() < 0) throw std::invalid_argument("SpinSystem: h must be nonnegative");
    for (const auto& s : sites) s.validate();
    if (state_count() > enumeration_cap)
      throw std::invalid_argument("SpinSystem: state space exceeds the enumeration cap");
  }

  size_t state_count() const {
    size_t total = 1;
    for (const auto& s : sites) {
      if (s.atoms.empty()) return 0;
      if (total > enumeration_cap / s.atoms.size() + 1) return enumeration_cap + 1;
      total *= s.atoms.size();
    }
    return total;
  }
};

inline SpinSystem symmetrize(const SpinSystem& sys) {
  SpinSystem out = sys;
  size_t n = sys.size();
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      out.J[j][k] = (sys.J[j][k] + sys.J[k][j]) / Rational(2);
  return out;
}

struct WeightedStateTable {
  std::vector<std::vector<Rational>> configs;  // lexicographic product order
  std::vector<IFloat> weights;                 // w(x), validated enclosures
  IFloat Z;
};

namespace detail {

template <typename Fn>
inline void for_each_config(const SpinSystem& sys, Fn&& fn) {
  size_t n = sys.size();
  std::vector<size_t> idx(n, 0);
  std::vector<Rational> x(n);
  for (;;) {
    for (size_t j = 0; j < n; ++j) x[j] = sys.sites[j].atoms[idx[j]].first;
    Rational mu_weight(1);
    for (size_t j = 0; j < n; ++j) mu_weight *= sys.sites[j].atoms[idx[j]].second;
    fn(x, mu_weight);
    size_t j = n;
    while (j > 0) {
      --j;
      if (++idx[j] < sys.sites[j].atoms.size()) break;
      idx[j] = 0;
      if (j == 0) return;
    }
    if (n == 0) return;
  }
}

inline Rational energy(const SpinSystem& sys, const std::vector<Rational>& x) {
  Rational e(0);
  size_t n = sys.size();
  for (size_t j = 0; j < n; ++j) {
    if (!sys.h[j].is_zero()) e += sys.h[j] * x[j];
    for (size_t k = 0; k < n; ++k)
      if (!sys.J[j][k].is_zero()) e += sys.J[j][k] * x[j] * x[k];
  }
  return e;
}

inline long digits_to_bits(int digits) { return static_cast<long>(digits * 3.33) + 64; }

}  // namespace detail

inline WeightedStateTable enumerate_states(const SpinSystem& sys, int digits = 50) {
  sys.validate();
  long prec = detail::digits_to_bits(digits);
  WeightedStateTable t;
  t.Z = IFloat::exact_int(0);
  detail::for_each_config(sys, [&](const std::vector<Rational>& x, const Rational& mu_w) {
    IFloat w = iexp(from_rational_i(detail::energy(sys, x), prec), prec);
    w = imul_rat(w, mu_w, prec);
    t.configs.push_back(x);
    t.weights.push_back(w);
    t.Z = iadd(t.Z, w, prec);
  });
  return t;
}

// raw moments m_k = Z^-1 sum w(x) (sum a_j x_j)^k, k = 0..2N; the even
// subsequence feeds the moment-comparison checker
struct FloatMomentSequence {
  std::vector<IFloat> raw;  // index k

  // r_n = m_{2n} / (2n-1)!!
  IFloat r(size_t n, long prec) const {
    return imul_rat(raw[2 * n], Rational(BigInt(1), gaussian_even_moment(static_cast<unsigned>(n))),
                    prec);
  }
};

inline FloatMomentSequence linear_comb_moments(const SpinSystem& sys,
                                               const std::vector<Rational>& a, size_t N,
                                               int digits = 50) {
  sys.validate();
  if (a.size() != sys.size())
    throw std::invalid_argument("linear_comb_moments: weight vector size mismatch");
  for (const auto& x : a)
    if (x.sign() < 0) throw std::invalid_argument("linear_comb_moments: weights must be >= 0");
  long prec = detail::digits_to_bits(digits);
  std::vector<IFloat> sums(2 * N + 1, IFloat::exact_int(0));
  IFloat Z = IFloat::exact_int(0);
  detail::for_each_config(sys, [&](const std::vector<Rational>& x, const Rational& mu_w) {
    IFloat w = imul_rat(iexp(from_rational_i(detail::energy(sys, x), prec), prec), mu_w, prec);
    Z = iadd(Z, w, prec);
    Rational s(0);
    for (size_t j = 0; j < x.size(); ++j) s += a[j] * x[j];
    Rational spow(1);
    for (size_t k = 0; k <= 2 * N; ++k) {
      if (k > 0) spow *= s;
      if (spow.is_zero()) continue;
      sums[k] = iadd(sums[k], imul_rat(w, spow, prec), prec);
    }
  });
  FloatMomentSequence out;
  out.raw.reserve(2 * N + 1);
  for (size_t k = 0; k <= 2 * N; ++k) out.raw.push_back(idiv(sums[k], Z, prec));
  return out;
}

// auxiliary Rademacher site 0 absorbs the field: h' = 0,
// J'_{0k} = J'_{k0} = h_k / 2, J'_{jk} = J_{jk}
inline SpinSystem ghost_spin(const SpinSystem& sys) {
  sys.validate();
  size_t n = sys.size();
  SpinSystem out;
  out.enumeration_cap = sys.enumeration_cap;
  out.sites.push_back(SiteMeasure::rademacher());
  for (const auto& s : sys.sites) out.sites.push_back(s);
  out.h.assign(n + 1, Rational(0));
  out.J.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t k = 0; k < n; ++k) {
    out.J[0][k + 1] = sys.h[k] / Rational(2);
    out.J[k + 1][0] = sys.h[k] / Rational(2);
    for (size_t j = 0; j < n; ++j) out.J[j + 1][k + 1] = sys.J[j][k];
  }
  return out;
}

// enumerates the law of (eps, eps X_1, ..., eps X_n) against the ghost
// system's law and returns a rigorous upper bound on the max probability
// difference over all configurations
inline BigFloat ghost_equivalence_check(const SpinSystem& sys, int digits = 50) {
  sys.validate();
  long prec = detail::digits_to_bits(digits);
  auto cmp_vec = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  };
  std::map<std::vector<Rational>, IFloat, decltype(cmp_vec)> lawA(cmp_vec), lawB(cmp_vec);

  WeightedStateTable base = enumerate_states(sys, digits);
  IFloat twoZ = imul_rat(base.Z, Rational(2), prec);
  for (size_t i = 0; i < base.configs.size(); ++i) {
    IFloat p = idiv(base.weights[i], twoZ, prec);
    for (int eps : {1, -1}) {
      std::vector<Rational> key;
      key.reserve(base.configs[i].size() + 1);
      key.push_back(Rational(eps));
      for (const auto& v : base.configs[i]) key.push_back(Rational(eps) * v);
      auto it = lawA.find(key);
      if (it == lawA.end())
        lawA.emplace(std::move(key), p);
      else
        it->second = iadd(it->second, p, prec);
    }
  }
  WeightedStateTable ghost = enumerate_states(ghost_spin(sys), digits);
  for (size_t i = 0; i < ghost.configs.size(); ++i) {
    IFloat p = idiv(ghost.weights[i], ghost.Z, prec);
    auto it = lawB.find(ghost.configs[i]);
    if (it == lawB.end())
      lawB.emplace(ghost.configs[i], p);
    else
      it->second = iadd(it->second, p, prec);
  }

  BigFloat worst;
  auto absorb = [&](const IFloat& pa, const IFloat& pb) {
    BigFloat bound = fadd(fadd(fsub(pa.mid, pb.mid).abs(), pa.rad), pb.rad);
    if (fcmp(bound, worst) > 0) worst = bound;
  };
  for (const auto& [key, pa] : lawA) {
    auto it = lawB.find(key);
    if (it == lawB.end())
      absorb(pa, IFloat::exact_int(0));
    else
      absorb(pa, it->second);
  }
  for (const auto& [key, pb] : lawB)
    if (lawA.find(key) == lawA.end()) absorb(IFloat::exact_int(0), pb);
  return worst;
}

struct LeeYangReport {
  std::vector<double> coeffs;     // shifted polynomial coefficients in w = e^z
  long long shift = 0;            // Laurent offset: S ranges over [shift, shift + deg]
  double palindrome_defect = 0.0; // relative deviation from coefficient symmetry
  std::vector<cdouble> roots;
  double max_circle_deviation = 0.0;
  bool used_ghost = false;
};

// E e^(zS) as a polynomial in w = e^z for S = sum a_j X_j with integer
// sites. A nonzero field is first absorbed by the ghost transform (with
// a_0 = 0) so the MGF is symmetric and the coefficient vector palindromic.
inline LeeYangReport lee_yang_polynomial(const SpinSystem& sys_in,
                                         const std::vector<long long>& a_in, int digits = 50) {
  SpinSystem sys = sys_in;
  std::vector<long long> a = a_in;
  sys.validate();
  if (a.size() != sys.size())
    throw std::invalid_argument("lee_yang_polynomial: weight vector size mismatch");
  for (long long w : a)
    if (w < 0) throw std::invalid_argument("lee_yang_polynomial: weights must be >= 0");
  LeeYangReport rep;
  bool has_field = false;
  for (const auto& x : sys.h)
    if (!x.is_zero()) has_field = true;
  if (has_field) {
    sys = ghost_spin(sys);
    a.insert(a.begin(), 0);
    rep.used_ghost = true;
  }
  for (const auto& s : sys.sites)
    if (!s.integer_support())
      throw std::invalid_argument("lee_yang_polynomial: sites must have integer support");

  long prec = detail::digits_to_bits(digits);
  std::map<long long, IFloat> laurent;
  IFloat Z = IFloat::exact_int(0);
  detail::for_each_config(sys, [&](const std::vector<Rational>& x, const Rational& mu_w) {
    IFloat w = imul_rat(iexp(from_rational_i(detail::energy(sys, x), prec), prec), mu_w, prec);
    Z = iadd(Z, w, prec);
    long long s = 0;
    for (size_t j = 0; j < x.size(); ++j) s += a[j] * x[j].num().to_longlong();
    auto it = laurent.find(s);
    if (it == laurent.end())
      laurent.emplace(s, w);
    else
      it->second = iadd(it->second, w, prec);
  });
  if (laurent.empty()) throw std::logic_error("lee_yang_polynomial: empty enumeration");
  long long lo = laurent.begin()->first, hi = laurent.rbegin()->first;
  rep.shift = lo;
  std::vector<double> c(static_cast<size_t>(hi - lo) + 1, 0.0);
  double zmid = Z.mid.to_double();
  for (const auto& [s, w] : laurent) c[static_cast<size_t>(s - lo)] = w.mid.to_double() / zmid;
  rep.coeffs = c;
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  for (size_t k = 0; k < c.size(); ++k)
    rep.palindrome_defect =
        std::max(rep.palindrome_defect, std::abs(c[k] - c[c.size() - 1 - k]) / scale);

  std::vector<cdouble> cc(c.begin(), c.end());
  RootResult rr = find_roots(cc);
  rep.roots = rr.roots;
  for (const auto& w : rep.roots)
    rep.max_circle_deviation = std::max(rep.max_circle_deviation, std::abs(std::abs(w) - 1.0));
  return rep;
}

enum class FerroVerdict { holds, fails, inconclusive };

inline const char* to_string(FerroVerdict v) {
  switch (v) {
    case FerroVerdict::holds: return "holds";
    case FerroVerdict::fails: return "fails";
    default: return "inconclusive";
  }
}

struct FerroComparisonResult {
  FerroVerdict verdict = FerroVerdict::inconclusive;
  BigFloat slack_mid;   // r_{p/2}^{q/2} - r_{q/2}^{p/2}
  BigFloat slack_rad;
};

// moment comparison for X = sum a_j X_j at even p <= q, with rigorous
// interval verdicts
inline FerroComparisonResult ferro_moment_comparison(const SpinSystem& sys,
                                                     const std::vector<Rational>& a, long long p,
                                                     long long q, int digits = 50) {
  if (p < 2 || q < p || p % 2 != 0 || q % 2 != 0)
    throw std::invalid_argument("ferro_moment_comparison: requires even 2 <= p <= q");
  FerroComparisonResult res;
  if (p == q) {
    res.verdict = FerroVerdict::holds;  // identical powers, slack exactly 0
    return res;
  }
  long prec = detail::digits_to_bits(digits);
  FloatMomentSequence ms = linear_comb_moments(sys, a, static_cast<size_t>(q / 2), digits);
  IFloat rp = ms.r(static_cast<size_t>(p / 2), prec);
  IFloat rq = ms.r(static_cast<size_t>(q / 2), prec);
  auto ipow = [&](IFloat base, long long e) {
    IFloat acc = IFloat::exact_int(1);
    for (long long i = 0; i < e; ++i) acc = imul(acc, base, prec);
    return acc;
  };
  IFloat slack = isub(ipow(rp, q / 2), ipow(rq, p / 2), prec);
  res.slack_mid = slack.mid;
  res.slack_rad = slack.rad;
  auto s = slack.certain_sign();
  if (!s)
    res.verdict = FerroVerdict::inconclusive;
  else
    res.verdict = *s >= 0 ? FerroVerdict::holds : FerroVerdict::fails;
  return res;
}

}  // namespace typel
