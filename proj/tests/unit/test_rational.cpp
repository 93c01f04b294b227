#include <gtest/gtest.h>

#include "tmh/error.hpp"
#include "tmh/rational.hpp"

using namespace tmh;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-12.5"), Rational(-25, 2));
  EXPECT_EQ(parse_rational("+2/4"), Rational(1, 2));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/", "/2", "1/0", "1.2.3", "abc", "1e5", "--1"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Rational, ExactDecimalRoundTrips) {
  EXPECT_EQ(to_exact_decimal(Rational(1, 8)), "0.125");
  EXPECT_EQ(to_exact_decimal(Rational(-3, 20)), "-0.15");
  EXPECT_EQ(to_exact_decimal(Rational(5)), "5");
  EXPECT_EQ(to_exact_decimal(Rational(1, 3)), "1/3");
  EXPECT_EQ(parse_rational(to_exact_decimal(Rational(-1234567, 1000))), Rational(-1234567, 1000));
}

TEST(Rational, MakeRationalCanonicalizes) {
  const Rational q = make_rational(Integer(6), Integer(-4));
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(make_rational(Integer(1), Integer(0)), DomainError);
}

TEST(Rational, Helpers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(pow2(70), Integer(1) << 70);
  EXPECT_EQ(popcount(0b101101), 4);
}
