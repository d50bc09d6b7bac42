#include <random>

#include <gtest/gtest.h>

#include "toric/closed_forms.hpp"
#include "toric/series.hpp"

using namespace toric;

namespace {

RationalSeries rs(int order, std::initializer_list<Rational> c) { return RationalSeries(order, std::vector<Rational>(c)); }

RationalSeries random_series(std::mt19937_64& rng, int order, bool unit) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RationalSeries s(order);
  for (int i = 0; i <= order; ++i) {
    s[i] = Rational(num(rng), den(rng));
    s[i].canonicalize();
  }
  if (unit && s[0] == 0) s[0] = 1;
  return s;
}

} // namespace

TEST(USeries, Examples) {
  const auto x = RationalSeries::x(4);
  const auto one = RationalSeries::constant(4, 1);
  EXPECT_EQ((one + x) * (one - x), rs(4, {1, 0, -1}));
  EXPECT_EQ(inverse(RationalSeries::constant(3, 1) - RationalSeries::x(3)), rs(3, {1, 1, 1, 1}));
  EXPECT_EQ(sqrt(one + x * x * Rational(4)), rs(4, {1, 0, 2, 0, -2}));
  EXPECT_EQ(sqrt(one), one);
  EXPECT_EQ(sqrt(rs(3, {1, -4})), rs(3, {1, -2, -2, -4}));
}

TEST(USeries, CatalanFromSquareRoot) {
  const auto x = RationalSeries::x(4);
  const auto r = sqrt(RationalSeries::constant(4, 1) - x * Rational(4));
  const auto cat = ((RationalSeries::constant(4, 1) - r) * Rational(1, 2)).shifted_down(1);
  EXPECT_EQ(cat, rs(3, {1, 1, 2, 5}));
  EXPECT_EQ((RationalSeries::constant(4, 1) - r) / (x * Rational(2)), rs(3, {1, 1, 2, 5}));
}

TEST(USeries, Transcendental) {
  EXPECT_EQ(sech(RationalSeries::x(4)), rs(4, {1, 0, Rational(-1, 2), 0, Rational(5, 24)}));
  EXPECT_EQ(tanh(RationalSeries::x(5)), rs(5, {0, 1, 0, Rational(-1, 3), 0, Rational(2, 15)}));
  const auto z = RationalSeries::x(6);
  EXPECT_EQ(sec(z) + tan(z), rs(6, {1, 1, Rational(1, 2), Rational(1, 3), Rational(5, 24), Rational(2, 15),
                                    Rational(61, 720)}));
  const auto e = exp(RationalSeries::x(5));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(e[n] * Rational(factorial(n)), 1);
}

TEST(USeries, PythagoreanIdentities) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto u = random_series(rng, 8, false);
    u[0] = 0;
    const auto one = RationalSeries::constant(8, 1);
    EXPECT_EQ(cosh(u) * cosh(u) - sinh(u) * sinh(u), one);
    EXPECT_EQ(cos(u) * cos(u) + sin(u) * sin(u), one);
    EXPECT_EQ(sech(u) * cosh(u), one);
    EXPECT_EQ(exp(u) * exp(-u), one);
  }
}

TEST(USeries, RingLaws) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(rng, 7, false);
    const auto b = random_series(rng, 7, true);
    const auto c = random_series(rng, 7, false);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) / b, a);
    auto sq = random_series(rng, 7, true);
    sq[0] = 1;
    EXPECT_EQ(sqrt(sq) * sqrt(sq), sq);
  }
}

TEST(USeries, Errors) {
  const auto x = RationalSeries::x(4);
  EXPECT_THROW(inverse(x), series_error);
  EXPECT_THROW(sqrt(RationalSeries::constant(4, 4)), series_error);
  EXPECT_THROW(exp(RationalSeries::constant(4, 1) + x), series_error);
  EXPECT_THROW(RationalSeries(-1), series_error);
}

TEST(USeries, PolynomialCoefficients) {
  const auto t = RationalPolynomial::var();
  const auto x = PolySeries::x(6);
  const auto v = egf_values(exp(x.scaled(t)) * sech(x));
  EXPECT_EQ(to_integer(v[4]), family_sa_polynomial(Complete{4}));
  // Division with a non-unit constant term solves exactly over Q[t].
  const auto num = PolySeries::constant(6, t * t - RationalPolynomial(1));
  const auto den = PolySeries::constant(6, t - RationalPolynomial(1));
  EXPECT_EQ((num / den)[0], t + RationalPolynomial(1));
  EXPECT_THROW(PolySeries::constant(6, RationalPolynomial(1)) / den, std::domain_error);
}

TEST(USeries, SubstituteSquare) {
  const RationalPolynomial p{Rational(1), Rational(0), Rational(3), Rational(0), Rational(5)};
  EXPECT_EQ(substitute_square(p), (RationalPolynomial{Rational(1), Rational(3), Rational(5)}));
  EXPECT_THROW(substitute_square(RationalPolynomial{Rational(1), Rational(1)}), series_error);
}

TEST(CentralBinomial, CorrectedFormHolds) {
  const int N = 10;
  const auto z = RationalSeries::x(N);
  const auto f = inverse(sqrt(RationalSeries::constant(N, 1) - z * Rational(4)));
  for (int n = 0; n <= N; ++n) EXPECT_EQ(f[n], binomial(2 * n, n));
}

// The expression 1/(1 - sqrt(1-4z)) has a denominator vanishing at z = 0, so
// it is not a power series at all and cannot be the generating function of
// the central binomial coefficients.
TEST(CentralBinomial, LiteralDenominatorFormIsNotAPowerSeries) {
  const int N = 10;
  const auto z = RationalSeries::x(N);
  const auto den = RationalSeries::constant(N, 1) - sqrt(RationalSeries::constant(N, 1) - z * Rational(4));
  EXPECT_EQ(den[0], 0);
  EXPECT_THROW(inverse(den), series_error);
  EXPECT_THROW(RationalSeries::constant(N, 1) / den, series_error);
}
