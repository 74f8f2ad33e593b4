// Exact even moments and the moment-comparison predicate.
//
// Derived expectations are computed here by independent routes before
// being asserted: direct atom expectations for lattices, Simpson
// quadrature for the Gaussian-polynomial fourth moment, binomial
// enumeration for Rademacher sums, N(0,2) closed forms for Gaussian sums.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "typel/moments.hpp"

using namespace typel;

TEST_CASE("gaussian even moments are odd double factorials") {
  CHECK(gaussian_even_moment(0) == BigInt(1));
  CHECK(gaussian_even_moment(1) == BigInt(1));
  CHECK(gaussian_even_moment(2) == BigInt(3));
  CHECK(gaussian_even_moment(5) == BigInt(945));
  CHECK(gaussian_even_moment(10).to_string() == "654729075");
}

TEST_CASE("gaussian_abs_moment matches the exact even values and rejects zero digits") {
  CHECK_THROWS(gaussian_abs_moment(Rational(2), 0));
  CHECK(to_decimal(gaussian_abs_moment(Rational(4), 30), 6) == "3.00000e0");
  CHECK(to_decimal(gaussian_abs_moment(Rational(2), 30), 6) == "1.00000e0");
  // p = 3: oracle 2 sqrt(2/pi) evaluated independently via sqrt
  BigFloat oracle = fmul_int(fsqrt(fdiv(BigFloat::from_int(2), pi_const(220), 200), 200), 2);
  BigFloat got = gaussian_abs_moment(Rational(3), 50);
  CHECK(fsub(got, oracle).abs().mag_exponent() < -150);
  // matches the even shortcut through the gamma route at requested precision
  BigFloat even10 = gaussian_abs_moment(Rational(10), 40);
  CHECK(to_decimal(even10, 10) == "9.450000000e2");
}

TEST_CASE("lattice moments: rademacher, three-atom, uniform on {1,2}") {
  auto rad = even_moments_lattice(LatticeDistribution::rademacher(), 3);
  CHECK(rad.m == std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
  // three-atom beta = 1/2: hand expectation m_n = 2 (1/4) 1^{2n} = 1/2
  auto ta = even_moments_lattice(LatticeDistribution::three_atom(Rational(1, 2)), 2);
  CHECK(ta.m == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 2)});
  // uniform on {+-1, +-2}: m_1 = (1+4)/2, m_2 = (1+16)/2
  LatticeDistribution u({Rational(0), Rational(1, 4), Rational(1, 4)});
  auto um = even_moments_lattice(u, 2);
  CHECK(um.m[1] == Rational(5, 2));
  CHECK(um.m[2] == Rational(17, 2));
  CHECK_THROWS(LatticeDistribution({Rational(1, 2), Rational(1, 2)}));  // mass 3/2
}

TEST_CASE("gausspoly moments: Z_1 fourth moment against Simpson quadrature") {
  // oracle: E Z_1^4 = int x^6 phi(x) dx with density x^2 phi(x)
  double simpson = 0.0;
  int n = 20000;
  double b = 14.0, h = b / n;
  auto f = [](double x) { return std::pow(x, 6) * std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI); };
  for (int i = 0; i <= n; ++i) {
    double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    simpson += w * f(i * h);
  }
  simpson *= 2.0 * h / 3.0;
  CHECK(std::abs(simpson - 15.0) < 1e-8);  // the quadrature oracle itself

  auto z1 = even_moments_gausspoly(GaussPolyLaw::z_b(Rational(1)), 2);
  CHECK(z1.r[1] == Rational(3));
  CHECK(z1.r[2] == Rational(5));
  CHECK(z1.m[2] == Rational(15));  // matches the oracle exactly

  auto g = even_moments_gausspoly(GaussPolyLaw::standard_gaussian(), 6);
  for (const auto& r : g.r) CHECK(r == Rational(1));

  // Z_b variance: r_1 = 1 + 2b
  auto zb = even_moments_gausspoly(GaussPolyLaw::z_b(Rational(1, 4)), 1);
  CHECK(zb.r[1] == Rational(3, 2));
}

TEST_CASE("independent sums: identity, rademacher pair, gaussian pair") {
  auto rad = even_moments_lattice(LatticeDistribution::rademacher(), 3);
  // point mass at zero is the identity element
  std::vector<Rational> delta_m = {Rational(1), Rational(0), Rational(0), Rational(0)};
  auto delta = make_moment_sequence(delta_m);
  auto same = moments_of_independent_sum(rad, delta);
  CHECK(same.m == rad.m);

  // two rademachers: E (e1+e2)^{2n} = 2^{2n-1} by binomial enumeration
  auto two = moments_of_independent_sum(rad, rad);
  for (size_t n = 1; n < two.size(); ++n) {
    // oracle: atoms -2, 0, 2 with probs 1/4, 1/2, 1/4
    Rational direct = Rational(2) * Rational(1, 4) *
                      Rational(pow_u(BigInt(2), 2 * static_cast<unsigned long long>(n)));
    CHECK(two.m[n] == direct);
    CHECK(two.m[n] == Rational(pow_u(BigInt(2), 2 * static_cast<unsigned long long>(n) - 1)));
  }

  // G + G ~ N(0,2): m_n = 2^n (2n-1)!!
  auto g = even_moments_gausspoly(GaussPolyLaw::standard_gaussian(), 5);
  auto gg = moments_of_independent_sum(g, g);
  for (size_t n = 0; n < gg.size(); ++n)
    CHECK(gg.m[n] == Rational(pow_u(BigInt(2), static_cast<unsigned long long>(n)) *
                              gaussian_even_moment(static_cast<unsigned>(n))));

  // commutativity and associativity, exactly
  auto z1 = even_moments_gausspoly(GaussPolyLaw::z_b(Rational(1)), 3);
  CHECK(moments_of_independent_sum(rad, z1).m == moments_of_independent_sum(z1, rad).m);
  auto left = moments_of_independent_sum(moments_of_independent_sum(rad, z1), two);
  auto right = moments_of_independent_sum(rad, moments_of_independent_sum(z1, two));
  CHECK(left.m == right.m);

  // length mismatch truncates to the shorter input
  auto longer = even_moments_lattice(LatticeDistribution::rademacher(), 6);
  CHECK(moments_of_independent_sum(longer, rad).size() == rad.size());
}

TEST_CASE("r-sequence log-concavity verdicts") {
  // rademacher: r_n = 1/(2n-1)!!; ratio test r_n^2 (2n+1) >= r_{n-1} r_{n+1} (2n-1)
  auto rad = even_moments_lattice(LatticeDistribution::rademacher(), 10);
  CHECK(check_r_logconcave(rad).ok());

  // three-atom: r_n = beta/(2n-1)!! for n >= 1, so the n = 1 inequality
  // beta^2 >= beta/3 pins the log-concavity threshold at beta = 1/3
  // (equality there); below it the p=2, q=4 comparison fails as well
  for (auto beta : {Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
    auto ta = even_moments_lattice(LatticeDistribution::three_atom(beta), 10);
    CHECK(check_r_logconcave(ta).ok());
  }
  for (auto beta : {Rational(1, 8), Rational(1, 4)}) {
    auto ta = even_moments_lattice(LatticeDistribution::three_atom(beta), 10);
    auto v = check_r_logconcave(ta);
    CHECK(!v.ok());
    CHECK(v.fail_index == 1);
    CHECK(!check_moment_comparison(ta, 2, 4).holds);
  }

  // artificial failure at n = 1
  auto bad = moment_sequence_from_r({Rational(1), Rational(1), Rational(3)});
  auto v = check_r_logconcave(bad);
  CHECK(!v.ok());
  CHECK(v.fail_index == 1);

  // zero followed by nonzero fails; zero tail holds
  auto gap = moment_sequence_from_r({Rational(1), Rational(0), Rational(2), Rational(0)});
  CHECK(!check_r_logconcave(gap).ok());
  auto tail = moment_sequence_from_r({Rational(1), Rational(1, 2), Rational(0), Rational(0)});
  CHECK(check_r_logconcave(tail).ok());

  // short sequences are vacuous with a warning flag
  auto shorty = moment_sequence_from_r({Rational(1), Rational(5)});
  auto vs = check_r_logconcave(shorty);
  CHECK(vs.ok());
  CHECK(vs.vacuous);
}

TEST_CASE("moment comparison: p = q, rademacher, Z_1") {
  auto rad = even_moments_lattice(LatticeDistribution::rademacher(), 10);
  auto eq = check_moment_comparison(rad, 4, 4);
  CHECK(eq.holds);
  CHECK(eq.slack.is_zero());

  auto r24 = check_moment_comparison(rad, 2, 4);
  CHECK(r24.holds);
  CHECK(r24.slack == Rational(1) - Rational(1, 3));  // r_1^2 - r_2 = 1 - 1/3

  auto z1 = even_moments_gausspoly(GaussPolyLaw::z_b(Rational(1)), 10);
  auto z24 = check_moment_comparison(z1, 2, 4);
  CHECK(z24.holds);
  CHECK(z24.slack == Rational(4));  // 3^2 - 5

  CHECK_THROWS(check_moment_comparison(rad, 3, 4));
  CHECK_THROWS(check_moment_comparison(rad, 2, 40));
}

TEST_CASE("log-concavity of r implies every even comparison (randomized)") {
  uint64_t s = 99;
  auto next = [&]() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s;
  };
  for (int trial = 0; trial < 40; ++trial) {
    // random lattice distribution of degree <= 5 (not necessarily certified)
    size_t n = 1 + next() % 5;
    std::vector<Rational> w(n + 1);
    Rational total(0);
    for (size_t k = 0; k <= n; ++k) {
      w[k] = Rational(static_cast<long long>(next() % 20));
      total += (k == 0 ? w[k] : Rational(2) * w[k]);
    }
    if (total.is_zero()) continue;
    for (size_t k = 0; k <= n; ++k) w[k] /= total;
    auto seq = even_moments_lattice(LatticeDistribution(std::move(w)), 10);
    if (!check_r_logconcave(seq).ok()) continue;
    for (long long p = 2; p <= 20; p += 2)
      for (long long q = p; q <= 20; q += 2)
        CHECK(check_moment_comparison(seq, p, q).holds);
  }
}

TEST_CASE("type L' reduction: moments of Y + c eps via the independent-sum route") {
  // Y rademacher, shift c = 2 modeled as c ~ eps scaled: E|Y + 2 eps|^{2n}
  // has the direct enumeration oracle over four sign combinations
  auto rad = even_moments_lattice(LatticeDistribution::rademacher(), 6);
  std::vector<Rational> shifted(7);
  for (size_t n = 0; n <= 6; ++n) {
    // atoms of Y + 2 eps: -3, -1, 1, 3 each with probability 1/4
    Rational acc(0);
    for (long long atom : {-3LL, -1LL, 1LL, 3LL})
      acc += Rational(1, 4) * Rational(atom).pow(2 * static_cast<long long>(n));
    shifted[n] = acc;
  }
  LatticeDistribution ceps({Rational(0), Rational(0), Rational(1, 2)});  // atoms +-2
  auto sum = moments_of_independent_sum(rad, even_moments_lattice(ceps, 6));
  CHECK(sum.m == shifted);
}
