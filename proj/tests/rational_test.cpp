#include "sqpack/rational.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using sqpack::Integer;
using sqpack::Rational;

TEST(RationalTest, CanonicalForm) {
    EXPECT_EQ(Rational(3, 6).canonical(), "1/2");
    EXPECT_EQ(Rational(-4, -8).canonical(), "1/2");
    EXPECT_EQ(Rational(4, -8).canonical(), "-1/2");
    EXPECT_EQ(Rational(0, 5).canonical(), "0/1");
    EXPECT_EQ(Rational(6, 2).canonical(), "3/1");
    EXPECT_EQ(Rational(6, 2).str(), "3");
    EXPECT_EQ(Rational(8, 3).str(), "8/3");
}

TEST(RationalTest, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, Parse) {
    EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("5"), Rational(5));
    for (const char* bad : {"", "/", "1/", "/2", "1/-2", "1.5", "a/b", "1/0", " 1/2", "1//2", "--1"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(RationalTest, ArithmeticIsExact) {
    Rational third(1, 3);
    EXPECT_EQ(third + third + third, Rational(1));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(1, 6) - Rational(1, 2), Rational(-1, 3));
    EXPECT_EQ(Rational(7, 3) / Rational(7, 9), Rational(3));
    EXPECT_LT(Rational(1, 3), Rational(34, 100));
    EXPECT_GT(Rational(-1, 3), Rational(-34, 100));
}

TEST(RationalTest, FloorCeilFrac) {
    EXPECT_EQ(Rational(7, 3).floor(), 2);
    EXPECT_EQ(Rational(7, 3).ceil(), 3);
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(-7, 3).ceil(), -2);
    EXPECT_EQ(Rational(-7, 3).frac(), Rational(2, 3));
    EXPECT_EQ(Rational(4).frac(), Rational(0));
    EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(RationalTest, Decimal) {
    EXPECT_EQ(Rational(8, 3).to_decimal(6), "2.666667");
    EXPECT_EQ(Rational(1, 8).to_decimal(2), "0.13");
    EXPECT_EQ(Rational(-1, 3).to_decimal(3), "-0.333");
    EXPECT_EQ(Rational(3).to_decimal(0), "3");
    EXPECT_EQ(Rational(1, 1000).to_decimal(2), "0.00");
}

TEST(RationalTest, BeyondSixtyFourBits) {
    Integer big("340282366920938463463374607431768211457");  // 2^128 + 1
    Rational r(Integer(1), big);
    EXPECT_EQ(Rational::parse(r.canonical()), r);
    EXPECT_EQ(r * Rational(big), Rational(1));
    EXPECT_THROW(sqpack::to_int64(big), std::overflow_error);
}

TEST(RationalTest, WideIntegralConstructors) {
    EXPECT_EQ(Rational(9223372036854775807LL).str(), "9223372036854775807");
    EXPECT_EQ(Rational(-9223372036854775807LL - 1).str(), "-9223372036854775808");
    EXPECT_EQ(Rational(18446744073709551615ULL).str(), "18446744073709551615");
}
