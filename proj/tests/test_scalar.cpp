#include "lierad/scalar.hpp"

#include <gtest/gtest.h>

using lierad::ParseError;
using lierad::Rational;
using lierad::Scalar;

TEST(Scalar, CanonicalFormAfterArithmetic) {
  Scalar a(Rational(2, 4));
  EXPECT_EQ(a.re().get_den(), 2);
  Scalar b = Scalar(Rational(1, 3), Rational(-2, 6)) * Scalar(3);
  EXPECT_EQ(b, Scalar(Rational(1), Rational(-1)));
  Scalar c = Scalar(Rational(-1, 2)) / Scalar(Rational(-1, 4));
  EXPECT_EQ(c, Scalar(2));
  EXPECT_GT(c.re().get_den(), 0);
}

TEST(Scalar, FieldOperations) {
  Scalar i = Scalar::i();
  EXPECT_EQ(i * i, Scalar(-1));
  Scalar z(Rational(3), Rational(4));
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(z.norm(), Rational(25));
  EXPECT_EQ(z.conj(), Scalar(Rational(3), Rational(-4)));
  EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
  Scalar acc(1);
  acc.add_mul(i, i);
  EXPECT_TRUE(acc.is_zero());
  acc.sub_mul(z, i);
  EXPECT_EQ(acc, Scalar(Rational(4), Rational(-3)));
}

TEST(Scalar, TextForms) {
  EXPECT_EQ(Scalar::parse("i"), Scalar::i());
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::i());
  EXPECT_EQ(Scalar::parse("2*i"), Scalar(Rational(0), Rational(2)));
  EXPECT_EQ(Scalar::parse("1/2+3/4*i"), Scalar(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("1/2-3/4*i"), Scalar(Rational(1, 2), Rational(-3, 4)));
  EXPECT_EQ(Scalar::parse("-7"), Scalar(-7));
  EXPECT_EQ(Scalar::parse("0+1/1*i"), Scalar::i());
  EXPECT_EQ(Scalar::parse("6/4"), Scalar(Rational(3, 2)));
}

TEST(Scalar, PrintParseRoundTrip) {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long d : {1L, 2L, 5L}) {
        Scalar z(Rational(a, d), Rational(b, 7));
        EXPECT_EQ(Scalar::parse(z.to_string()), z) << z.to_string();
      }
}

TEST(Scalar, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/", "1//2", "1+", "i*i", "1/0", "2**i", "1+2"})
    EXPECT_THROW(Scalar::parse(bad), ParseError) << bad;
}
