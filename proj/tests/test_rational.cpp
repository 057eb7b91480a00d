#include <gtest/gtest.h>

#include "n2char/rational.hpp"

using namespace n2char;

TEST(Rational, LowestTermsPositiveDenominator)
{
	const Rational x = make_rational(6, -4);
	EXPECT_EQ(numerator(x), -3);
	EXPECT_EQ(denominator(x), 2);
	EXPECT_EQ(to_string(x), "-3/2");
	EXPECT_EQ(to_string(Rational(5)), "5/1");
	EXPECT_EQ(to_pretty(Rational(5)), "5");
	EXPECT_EQ(make_rational(-3, -6), make_rational(1, 2));
	EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, Parse)
{
	EXPECT_EQ(parse_rational("8"), Rational(8));
	EXPECT_EQ(parse_rational("-7/14"), make_rational(-1, 2));
	EXPECT_EQ(parse_rational("+3/1"), Rational(3));
	EXPECT_THROW(parse_rational("1/0"), ParseError);
	EXPECT_THROW(parse_rational("x"), ParseError);
	EXPECT_THROW(parse_rational(""), ParseError);
	EXPECT_THROW(parse_rational("1/2/3"), ParseError);
	EXPECT_THROW(parse_rational("1.5"), ParseError);
}

TEST(Rational, FloorCeil)
{
	EXPECT_EQ(floor(make_rational(7, 2)), 3);
	EXPECT_EQ(floor(make_rational(-7, 2)), -4);
	EXPECT_EQ(ceil(make_rational(7, 2)), 4);
	EXPECT_EQ(ceil(make_rational(-7, 2)), -3);
	EXPECT_EQ(ceil(Rational(4)), 4);
}

TEST(Rational, RoundTripThroughString)
{
	for (int n = -20; n <= 20; ++n) {
		for (int d = 1; d <= 12; ++d) {
			const Rational x = make_rational(n, d);
			EXPECT_EQ(parse_rational(to_string(x)), x);
		}
	}
}
