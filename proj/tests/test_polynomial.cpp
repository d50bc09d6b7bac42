#include <gtest/gtest.h>

#include "toric/polynomial.hpp"
#include "test_support.hpp"

using namespace toric;
using toric::testing::ipoly;

TEST(Polynomial, NormalizesTrailingZeros) {
  EXPECT_EQ(ipoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(ipoly({0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
}

TEST(Polynomial, Arithmetic) {
  const auto a = ipoly({1, 1});
  const auto b = ipoly({-1, 1});
  EXPECT_EQ(a * b, ipoly({-1, 0, 1}));
  EXPECT_EQ(a + b, ipoly({0, 2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(-a, ipoly({-1, -1}));
}

TEST(Polynomial, EvaluateAndCompose) {
  const auto p = ipoly({4, 0, -5, 0, 1});
  EXPECT_EQ(p.evaluate(Integer(1)), 0);
  EXPECT_EQ(p.evaluate(Integer(2)), 0);
  EXPECT_EQ(p.compose(ipoly({1, 1})), ipoly({0, -6, 1, 4, 1}));
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(ipoly({1, 4, 3}).to_string("z"), "1+4z+3z^2");
  EXPECT_EQ(ipoly({4, 0, -5, 0, 1}).to_string("t"), "4-5t^2+t^4");
  EXPECT_EQ(ipoly({0, -1}).to_string("t"), "-t");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
}

TEST(Polynomial, ExactDivision) {
  const RationalPolynomial num = to_rational(ipoly({-1, 0, 1}));
  EXPECT_EQ(divide_exact(num, to_rational(ipoly({1, 1}))), to_rational(ipoly({-1, 1})));
  EXPECT_THROW(divide_exact(num, to_rational(ipoly({2, 1}))), std::domain_error);
  auto [q, r] = divmod(to_rational(ipoly({1, 0, 1})), to_rational(ipoly({0, 1})));
  EXPECT_EQ(q, to_rational(ipoly({0, 1})));
  EXPECT_EQ(r, to_rational(ipoly({1})));
}

TEST(Polynomial, IntegerRoundTrip) {
  const auto p = ipoly({3, -2, 7});
  EXPECT_EQ(to_integer(to_rational(p)), p);
  EXPECT_THROW(to_integer(RationalPolynomial{Rational(1, 2)}), std::domain_error);
}

TEST(IntegerHelpers, BinomialAndFactorial) {
  EXPECT_EQ(binomial(10, 5), 252);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(factorial(12), 479001600);
  EXPECT_EQ(factorial(0), 1);
}
