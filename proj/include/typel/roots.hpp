// roots.hpp - simultaneous polynomial root finding (Aberth-Ehrlich).
//
// Extended-precision (long double) complex iteration started on a slightly
// detuned circle, followed by Newton polishing. Coefficients arrive with
// ~80 significant bits so simple well-separated roots come out well below
// 1e-12; exact certification is the job of the Schur-Cohn machinery, this
// is the numeric cross-check.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace typel {

using cdouble = std::complex<double>;
using creal = std::complex<long double>;

struct RootResult {
  std::vector<cdouble> roots;      // rounded for reporting
  std::vector<creal> roots_ext;    // full working precision
  int zero_roots = 0;              // multiplicity of the root at 0 (factored out)
  bool converged = true;
  double max_residual = 0.0;       // max |p(w_i)| with coefficients scaled to max 1
  int iterations = 0;
};

namespace detail {

inline creal horner(const std::vector<creal>& c, creal x) {
  creal acc = 0.0L;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

inline creal horner_deriv(const std::vector<creal>& c, creal x) {
  creal acc = 0.0L;
  for (size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * static_cast<long double>(i);
  return acc;
}

}  // namespace detail

// coeffs low-to-high; leading coefficient must be nonzero
inline RootResult find_roots(std::vector<creal> coeffs, int max_iter = 600) {
  RootResult res;
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0L) coeffs.pop_back();
  // factor out roots at the origin
  size_t low = 0;
  while (low < coeffs.size() && std::abs(coeffs[low]) == 0.0L) ++low;
  if (low == coeffs.size()) return res;  // zero polynomial: treat as no roots
  res.zero_roots = static_cast<int>(low);
  coeffs.erase(coeffs.begin(), coeffs.begin() + low);

  size_t n = coeffs.size() - 1;
  if (n == 0) {
    for (int i = 0; i < res.zero_roots; ++i) res.roots_ext.push_back(0.0L);
  } else {
    long double norm = 0.0L;
    for (auto& c : coeffs) norm = std::max(norm, std::abs(c));
    for (auto& c : coeffs) c /= norm;

    // initial guesses: circle of radius near the geometric mean of root
    // moduli, angles detuned to break symmetry
    long double r0 =
        std::pow(std::abs(coeffs[0] / coeffs[n]), 1.0L / static_cast<long double>(n));
    if (!(r0 > 0.0L) || !std::isfinite(static_cast<double>(r0))) r0 = 1.0L;
    r0 = std::max(0.25L, std::min(r0, 4.0L));
    std::vector<creal> w(n);
    const long double tau = 6.283185307179586476925286766559005768L;
    for (size_t i = 0; i < n; ++i) {
      long double ang = tau * (static_cast<long double>(i) + 0.353L) / static_cast<long double>(n) + 0.4L;
      w[i] = (r0 * 1.0371L) * creal(std::cos(ang), std::sin(ang));
    }

    int iter = 0;
    for (; iter < max_iter; ++iter) {
      long double move = 0.0L;
      for (size_t i = 0; i < n; ++i) {
        creal p = detail::horner(coeffs, w[i]);
        creal dp = detail::horner_deriv(coeffs, w[i]);
        if (std::abs(p) == 0.0L) continue;
        creal newton = (dp == creal(0.0L)) ? creal(1e-15L, 1e-15L) : p / dp;
        creal sum = 0.0L;
        for (size_t j = 0; j < n; ++j)
          if (j != i) sum += 1.0L / (w[i] - w[j]);
        creal denom = 1.0L - newton * sum;
        creal delta = (std::abs(denom) == 0.0L) ? newton : newton / denom;
        w[i] -= delta;
        move = std::max(move, std::abs(delta) / std::max(1.0L, std::abs(w[i])));
      }
      if (move < 1e-17L) break;
    }
    res.iterations = iter;
    res.converged = iter < max_iter;

    // Newton polish
    for (size_t i = 0; i < n; ++i) {
      for (int k = 0; k < 4; ++k) {
        creal p = detail::horner(coeffs, w[i]);
        creal dp = detail::horner_deriv(coeffs, w[i]);
        if (std::abs(dp) == 0.0L) break;
        creal step = p / dp;
        if (!(std::abs(step) < 1.0L)) break;
        w[i] -= step;
      }
      res.max_residual =
          std::max(res.max_residual, static_cast<double>(std::abs(detail::horner(coeffs, w[i]))));
    }

    for (int i = 0; i < res.zero_roots; ++i) res.roots_ext.push_back(0.0L);
    res.roots_ext.insert(res.roots_ext.end(), w.begin(), w.end());
  }
  res.roots.reserve(res.roots_ext.size());
  for (const auto& r : res.roots_ext)
    res.roots.push_back(cdouble(static_cast<double>(r.real()), static_cast<double>(r.imag())));
  return res;
}

inline RootResult find_roots(const std::vector<cdouble>& coeffs, int max_iter = 600) {
  std::vector<creal> c(coeffs.begin(), coeffs.end());
  return find_roots(std::move(c), max_iter);
}

}  // namespace typel
