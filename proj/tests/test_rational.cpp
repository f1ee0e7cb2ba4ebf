#include <gtest/gtest.h>

#include <stdexcept>

#include "mitl/error.hpp"
#include "mitl/rational.hpp"

using mitl::Rational;

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("-3.25"), Rational(-13, 4));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("0.04"), Rational(1, 25));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1.2.3", "1/0", "--1", "1e5"}) EXPECT_ANY_THROW(Rational::parse(bad)) << bad;
}

TEST(Rational, NormalizesSignAndTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 10) + Rational(2, 10), Rational(3, 10));
  EXPECT_EQ(Rational(1, 3) * Rational(3), Rational(1));
  EXPECT_EQ(Rational(1) / Rational(3) - Rational(1, 3), Rational(0));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_TRUE(Rational(3, 2).is_multiple_of(Rational(1, 2)));
  EXPECT_FALSE(Rational(3, 2).is_multiple_of(Rational(1)));
}

TEST(Rational, PrintsTerminatingDecimalsAndFractions) {
  EXPECT_EQ(Rational(27, 2).str(), "13.5");
  EXPECT_EQ(Rational(1, 25).str(), "0.04");
  EXPECT_EQ(Rational(-5).str(), "-5");
  EXPECT_EQ(Rational(1, 3).str(), "1/3");
}

TEST(Rational, OverflowThrows) {
  Rational big(INT64_MAX);
  EXPECT_THROW((void)(big * big), std::overflow_error);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_ANY_THROW((void)(Rational(1) / Rational(0))); }
