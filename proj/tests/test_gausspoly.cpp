// Polynomial-Gaussian laws: exact densities via the differential-operator
// route, closed-form absolute moments vs the Gamma-reduction, the two-sided
// moment envelope, the interlacing family, Schur-concavity probes, and the
// seeded sampler (sanity only).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "typel/gausspoly.hpp"

using namespace typel;

TEST_CASE("density_from_law: hand densities") {
  // Z_1: P(x) = x^2
  auto z1 = density_from_law(GaussPolyLaw::z_b(Rational(1)));
  CHECK(z1.P.c == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
  // Z_b: P(x) = 1 - b + b x^2
  auto zb = density_from_law(GaussPolyLaw::z_b(Rational(1, 4)));
  CHECK(zb.P.c == std::vector<Rational>{Rational(3, 4), Rational(0), Rational(1, 4)});
  // pure gaussian: P = 1
  auto g = density_from_law(GaussPolyLaw::standard_gaussian());
  CHECK(g.P.c == std::vector<Rational>{Rational(1)});
  // sum b_j > a violates the density regime
  CHECK_THROWS(density_from_law(GaussPolyLaw(Rational(1), {Rational(1), Rational(1)})));
}

TEST_CASE("the two exact moment pipelines agree on random laws") {
  uint64_t s = 7;
  auto next = [&]() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 11;
  };
  for (int t = 0; t < 40; ++t) {
    size_t m = next() % 4;
    std::vector<Rational> b(m);
    Rational total(0);
    for (auto& x : b) {
      x = Rational(static_cast<long long>(next() % 5), static_cast<long long>(1 + next() % 4));
      total += x;
    }
    Rational a = total + Rational(static_cast<long long>(1 + next() % 4),
                                  static_cast<long long>(1 + next() % 3));
    GaussPolyLaw law(a, b);
    auto via_sigma = even_moments_gausspoly(law, 10);
    auto via_density = even_moments_from_density(density_from_law(law), 10);
    CHECK(via_sigma.m == via_density.m);
    CHECK(check_r_logconcave(via_sigma).ok());
  }
}

TEST_CASE("closed-form Z_b moments against the quadrature reduction") {
  for (auto p : {Rational(2), Rational(3), Rational(4), Rational(5), Rational(15, 2)}) {
    for (auto b : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      BigFloat closed = abs_moment_closed_zb(p, b, 40, /*normalized=*/false);
      auto dens = density_from_law(GaussPolyLaw::z_b(b));
      BigFloat quad = abs_moment_quadrature(dens, p, 40);
      CHECK(fsub(closed, quad).abs().mag_exponent() < -100);  // far below 1e-20
    }
  }
  // b = 0 reduces to E|G|^p
  BigFloat g3 = abs_moment_closed_zb(Rational(3), Rational(0), 40, false);
  CHECK(fsub(g3, gaussian_abs_moment_bf(Rational(3), 180)).abs().mag_exponent() < -120);
  // normalized second moment is 1 for every b
  for (auto b : {Rational(0), Rational(2, 5), Rational(1)}) {
    BigFloat one = abs_moment_closed_zb(Rational(2), b, 40);
    CHECK(fsub(one, BigFloat::from_int(1)).abs().mag_exponent() < -120);
  }
  // E Z_1^4 = 15 exactly, so the normalized value is 5/3
  BigFloat z14 = abs_moment_closed_zb(Rational(4), Rational(1), 40);
  CHECK(fsub(z14, from_rational(Rational(5, 3), 160)).abs().mag_exponent() < -120);
}

TEST_CASE("abs_moment_quadrature at even p reproduces the exact rational moments") {
  GaussPolyLaw law(Rational(2), {Rational(1, 2), Rational(1)});
  auto dens = density_from_law(law);
  auto exact = even_moments_gausspoly(law, 4);
  for (size_t n = 1; n <= 4; ++n) {
    BigFloat viaq = abs_moment_quadrature(dens, Rational(2 * static_cast<long long>(n)), 40);
    BigFloat viax = from_rational(exact.m[n], 200);
    CHECK(fdiv(fsub(viaq, viax).abs(), viax, 60).mag_exponent() < -120);
  }
}

TEST_CASE("variance and E Z_1^4 sanity") {
  CHECK(GaussPolyLaw::z_b(Rational(1)).variance() == Rational(3));
  auto z1 = even_moments_gausspoly(GaussPolyLaw::z_b(Rational(1)), 2);
  CHECK(z1.m[1] == Rational(3));
  CHECK(z1.m[2] == Rational(15));
}

TEST_CASE("moment envelope: tight at both extremes, strict in between") {
  // law = Z_1: lower bound tight
  for (auto p : {Rational(3), Rational(7, 2), Rational(4)}) {
    auto v = moment_envelope_check(GaussPolyLaw::z_b(Rational(1)), p, 25);
    CHECK(v.holds);
    CHECK(v.lower_slack.abs().mag_exponent() < -60);  // ~0 at working precision
    CHECK(v.upper_slack.sign() > 0);
  }
  // pure gaussian: upper bound tight
  auto g = moment_envelope_check(GaussPolyLaw::standard_gaussian(), Rational(3), 25);
  CHECK(g.holds);
  CHECK(g.upper_slack.abs().mag_exponent() < -60);
  CHECK(g.lower_slack.sign() > 0);
  // strictly inside: a=1, b = {1/2, 1/2} wait sum b = 1 = a is allowed
  auto mid = moment_envelope_check(GaussPolyLaw(Rational(1), {Rational(1, 2), Rational(1, 2)}),
                                   Rational(3), 25);
  CHECK(mid.holds);
  CHECK(mid.lower_slack.sign() > 0);
  CHECK(mid.upper_slack.sign() > 0);
  // p < 3 refused unless diagnostic
  CHECK_THROWS(moment_envelope_check(GaussPolyLaw::standard_gaussian(), Rational(2), 20));
  auto diag = moment_envelope_check(GaussPolyLaw::standard_gaussian(), Rational(2), 20, true);
  CHECK(diag.holds);
}

TEST_CASE("moment envelope against a Monte Carlo oracle") {
  GaussPolyLaw law(Rational(1), {Rational(1, 2), Rational(1, 2)});
  Rational p(3);
  auto v = moment_envelope_check(law, p, 25);
  REQUIRE(v.holds);
  auto dens = density_from_law(law);
  double exact = abs_moment_quadrature(dens, p, 25).to_double();
  auto draws = sample(law, 12345, 400000);
  double mc = 0.0;
  for (double x : draws) mc += std::pow(std::abs(x), 3.0);
  mc /= static_cast<double>(draws.size());
  // |X|^3 has finite variance here; 400k draws give ~1% accuracy
  CHECK(std::abs(mc - exact) / exact < 0.03);
}

TEST_CASE("g_lambda: construction matches the two-factor law") {
  for (auto l : {Rational(1, 10), Rational(1, 4), Rational(2, 5)}) {
    auto via_formula = GLambda(l).poly_factor();
    auto via_operator = density_from_law(GaussPolyLaw(Rational(1), {l, Rational(1) - l}));
    CHECK(via_formula.c == via_operator.P.c);
  }
}

TEST_CASE("g_lambda matches a numeric convolution of scaled Z_1 densities") {
  // independent oracle: g_l(x) = (f_1 * f_2)(x), f_i the density of sqrt(b_i) Z_1
  Rational l(3, 10);
  double lam = l.to_double();
  auto f_scaled = [](double b, double y) {
    // density of sqrt(b) Z_1: (y/sqrt(b))^2 phi(y/sqrt(b)) / sqrt(b)
    double t = y / std::sqrt(b);
    return t * t * std::exp(-t * t / 2.0) / std::sqrt(2.0 * M_PI) / std::sqrt(b);
  };
  auto glam = GLambda(l);
  for (double x : {0.25, 0.5, 1.0, 2.0}) {
    // Simpson over y in [-12, 12]
    int n = 48000;
    double a = -12.0, b = 12.0, h = (b - a) / n, acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      double y = a + i * h;
      double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      acc += w * f_scaled(lam, y) * f_scaled(1.0 - lam, x - y);
    }
    acc *= h / 3.0;
    double direct = glam.poly_factor().eval(Rational(0)).to_double();
    (void)direct;
    double gl = 0.0;
    {
      double px = 0.0, xp = 1.0;
      for (size_t k = 0; k < glam.poly_factor().c.size(); ++k) {
        px += glam.poly_factor().c[k].to_double() * xp;
        xp *= x;
      }
      gl = px * std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI);
    }
    CHECK(std::abs(acc - gl) < 1e-10);
  }
}

TEST_CASE("g_lambda interlacing: zeros and sign pattern") {
  auto an = g_lambda_analysis(Rational(1, 10), Rational(1, 5), 35);
  CHECK(an.sign_pattern_ok);
  // zeros at sqrt(3 -+ sqrt(6)) to 1e-10
  double lo = std::sqrt(3.0 - std::sqrt(6.0)), hi = std::sqrt(3.0 + std::sqrt(6.0));
  CHECK(std::abs(an.zero_lo.to_double() - lo) < 1e-10);
  CHECK(std::abs(an.zero_hi.to_double() - hi) < 1e-10);
  // identical lambdas: identically zero difference
  auto same = g_lambda_analysis(Rational(1, 4), Rational(1, 4));
  CHECK(same.sign_pattern_ok);
  CHECK_THROWS(g_lambda_analysis(Rational(2, 5), Rational(1, 5)));
  CHECK_THROWS(g_lambda_analysis(Rational(1, 10), Rational(3, 5)));
}

TEST_CASE("majorization order") {
  using V = std::vector<Rational>;
  CHECK(majorizes(V{Rational(1), Rational(0)}, V{Rational(1, 2), Rational(1, 2)}));
  CHECK(!majorizes(V{Rational(1, 2), Rational(1, 2)}, V{Rational(1), Rational(0)}));
  CHECK(majorizes(V{Rational(1, 2), Rational(1, 2)}, V{Rational(1, 2), Rational(1, 2)}));
  // unequal totals never majorize
  CHECK(!majorizes(V{Rational(2)}, V{Rational(1)}));
}

TEST_CASE("schur concavity probe: closed-form case, equality, chain toward the CLT") {
  // b = (1/2, 1/2) majorized by (1, 0), Y = 0, p = 3
  auto v = schur_concavity_probe({Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)},
                                 Rational(3), std::monostate{}, 25);
  CHECK(v.holds);
  CHECK(v.margin.sign() > 0);

  // equality at b = b'
  auto eq = schur_concavity_probe({Rational(1, 2), Rational(1, 2)},
                                  {Rational(1, 2), Rational(1, 2)}, Rational(3), std::monostate{},
                                  25);
  CHECK(eq.holds);
  CHECK(eq.margin.abs().mag_exponent() < -40);

  // p = 4: psi values are exact even moments; the chain (1/k,...,1/k) increases with k
  std::vector<BigFloat> chain;
  for (int k = 1; k <= 4; ++k) {
    std::vector<Rational> b(static_cast<size_t>(k), Rational(1, k));
    chain.push_back(psi_value(b, Rational(4), std::monostate{}, 25));
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(fcmp(chain[i + 1], chain[i]) > 0);
  // oracle for k = 4: exact even moment of the 4-factor law (value 24),
  // increasing toward the CLT endpoint E|N(0,3)|^4 = 27
  auto law4 = GaussPolyLaw(Rational(1), std::vector<Rational>(4, Rational(1, 4)));
  auto m4 = even_moments_gausspoly(law4, 2);
  CHECK(m4.m[2] == Rational(24));
  CHECK(fsub(chain.back(), from_rational(m4.m[2], 200)).abs().mag_exponent() < -40);
  CHECK(fcmp(chain.back(), BigFloat::from_int(27)) < 0);

  CHECK_THROWS(schur_concavity_probe({Rational(1)}, {Rational(1)}, Rational(2), std::monostate{}, 20));
  CHECK_THROWS(schur_concavity_probe({Rational(1), Rational(0)},
                                     {Rational(1, 2), Rational(1, 2)}, Rational(3),
                                     std::monostate{}, 20));
}

TEST_CASE("schur probe with a lattice Y uses the shifted closed forms") {
  // Y rademacher: E|S + Y|^p with S = sqrt(b) Z_1 components
  LatticeDistribution rad = LatticeDistribution::rademacher();
  auto v = schur_concavity_probe({Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)},
                                 Rational(3), rad, 22);
  CHECK(v.holds);
  // cross-check psi at p = 4 against the exact moment route:
  // E|S + Y|^4 = m_4(S) + 6 m_2(S) m_2(Y) + m_4(Y) for independent symmetric S, Y
  auto law = GaussPolyLaw(Rational(1), {Rational(1)});
  auto mS = even_moments_gausspoly(law, 2);
  Rational expect = mS.m[2] + Rational(6) * mS.m[1] * Rational(1) + Rational(1);
  BigFloat psi = psi_value({Rational(1)}, Rational(4), rad, 25);
  CHECK(fsub(psi, from_rational(expect, 200)).abs().mag_exponent() < -40);
}

TEST_CASE("transitivity of the probe along a majorization chain") {
  std::vector<Rational> b3(3, Rational(1, 3));
  std::vector<Rational> b2 = {Rational(1, 2), Rational(1, 2), Rational(0)};
  std::vector<Rational> b1 = {Rational(1), Rational(0), Rational(0)};
  auto v32 = schur_concavity_probe(b3, b2, Rational(3), std::monostate{}, 22);
  auto v21 = schur_concavity_probe(b2, b1, Rational(3), std::monostate{}, 22);
  auto v31 = schur_concavity_probe(b3, b1, Rational(3), std::monostate{}, 22);
  CHECK(v32.holds);
  CHECK(v21.holds);
  CHECK(v31.holds);
  CHECK(fcmp(v31.margin, v32.margin) >= 0);
}

TEST_CASE("zb monotonicity in b for p >= 3, constant at p = 2") {
  std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                Rational(1)};
  auto v3 = zb_monotone_in_b(Rational(3), grid);
  CHECK(v3.strictly_decreasing);
  CHECK(v3.derivative_negative);
  auto v4 = zb_monotone_in_b(Rational(4), grid);
  CHECK(v4.strictly_decreasing);
  // endpoints at p = 4: b=0 gives 3, b=1 gives 5/3
  CHECK(fsub(v4.values.front(), BigFloat::from_int(3)).abs().mag_exponent() < -80);
  CHECK(fsub(v4.values.back(), from_rational(Rational(5, 3), 160)).abs().mag_exponent() < -80);
  auto v2 = zb_monotone_in_b(Rational(2), grid);
  CHECK(!v2.strictly_decreasing);  // constant 1
  for (auto& val : v2.values)
    CHECK(fsub(val, BigFloat::from_int(1)).abs().mag_exponent() < -80);
}

TEST_CASE("sampler: variance of Z_1, KS against the normal, E|Z_b|^3 near closed form") {
  auto z1 = sample(GaussPolyLaw::z_b(Rational(1)), 424242, 1000000);
  double mean = 0.0, var = 0.0;
  for (double x : z1) mean += x;
  mean /= z1.size();
  for (double x : z1) var += (x - mean) * (x - mean);
  var /= z1.size();
  CHECK(std::abs(var - 3.0) < 0.02);

  // pure gaussian: Kolmogorov-Smirnov at the 1% level (critical 1.63/sqrt(n))
  auto g = sample(GaussPolyLaw::standard_gaussian(), 9999, 200000);
  std::sort(g.begin(), g.end());
  double ks = 0.0;
  for (size_t i = 0; i < g.size(); ++i) {
    double cdf = 0.5 * std::erfc(-g[i] / std::sqrt(2.0));
    double hi = static_cast<double>(i + 1) / g.size(), lo = static_cast<double>(i) / g.size();
    ks = std::max(ks, std::max(std::abs(cdf - hi), std::abs(cdf - lo)));
  }
  CHECK(ks < 1.63 / std::sqrt(static_cast<double>(g.size())));

  // E|Z_b|^3 within 3 standard errors of the closed form
  Rational b(1, 2);
  auto zb = sample(GaussPolyLaw::z_b(b), 55555, 400000);
  double m3 = 0.0, m6 = 0.0;
  for (double x : zb) {
    double a3 = std::abs(x * x * x);
    m3 += a3;
    m6 += a3 * a3;
  }
  m3 /= zb.size();
  m6 /= zb.size();
  double se = std::sqrt((m6 - m3 * m3) / zb.size());
  double closed = abs_moment_closed_zb(Rational(3), b, 25, false).to_double();
  CHECK(std::abs(m3 - closed) < 3.0 * se);
}

TEST_CASE("envelope normalization utility") {
  GaussPolyLaw law(Rational(3), {Rational(1, 2), Rational(1)});
  auto [scaled, factor] = envelope_normalize(law);
  CHECK(factor == Rational(3, 2));
  CHECK(scaled.sum_b() == Rational(1));
  CHECK(scaled.a == Rational(2));
  CHECK_THROWS(envelope_normalize(GaussPolyLaw::standard_gaussian()));
}
