#include <gtest/gtest.h>

#include <limits>

#include <stdexcept>
#include "skein/rational.hpp"

using skein::Rational;

TEST(Rational, ReducesOnConstruction) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(5).str(), "5/1");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* t : {"0/1", "7/1", "-3/4", "12/5"}) EXPECT_EQ(Rational::parse(t).str(), t);
  EXPECT_EQ(Rational::parse("-8"), Rational(-8));
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3), b(-5, 7);
  EXPECT_EQ(a + b, Rational(-8, 21));
  EXPECT_EQ(a * b, Rational(-5, 21));
  EXPECT_EQ(a / b, Rational(-7, 15));
  EXPECT_EQ(b.inverse(), Rational(-7, 5));
  EXPECT_TRUE(b < a);
  EXPECT_EQ(b.sign(), -1);
}

TEST(Rational, SpillsToBigIntegersAndBack) {
  const int64_t big = std::numeric_limits<int64_t>::max() / 3;
  Rational x(big);
  Rational y = x * x * x;  // far beyond 64 bits
  EXPECT_EQ(y / x / x, x);
  mpz_class expected = mpz_class(big) * big * big;
  EXPECT_EQ(y.numerator(), expected);
  EXPECT_TRUE((y - y).is_zero());
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}
