#include <gtest/gtest.h>

#include "avoidance/errors.hpp"
#include "avoidance/rational.hpp"

namespace avoidance {
namespace {

TEST(RationalText, ParsesReducedFractions) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-010"), Rational(-10));
  EXPECT_EQ(to_string(make_rational(-2, 4)), "-1/2");
}

TEST(RationalText, RejectsZeroDenominator) {
  EXPECT_ANY_THROW(make_rational(1, 0));
  EXPECT_ANY_THROW(parse_rational("1/0"));
}

TEST(GaussianArithmetic, FieldOperations) {
  const Gaussian a(make_rational(1, 2), Rational(-3));
  const Gaussian b(Rational(2), Rational(1));
  EXPECT_EQ(a * b, Gaussian(Rational(4), make_rational(-11, 2)));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a - a, Gaussian(0));
  EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
  EXPECT_EQ(a.conj(), Gaussian(make_rational(1, 2), Rational(3)));
  EXPECT_EQ(b.norm2(), Rational(5));
}

TEST(GaussianArithmetic, ZeroHasNoInverse) { EXPECT_ANY_THROW(Gaussian(0).inverse()); }

TEST(GaussianText, Formats) {
  EXPECT_EQ(to_string(Gaussian(3)), "3");
  EXPECT_EQ(to_string(Gaussian(make_rational(-1, 2))), "-1/2");
  EXPECT_EQ(to_string(Gaussian::i()), "i");
  EXPECT_EQ(to_string(Gaussian(Rational(0), Rational(-2))), "-2i");
  EXPECT_EQ(to_string(Gaussian(make_rational(1, 2), Rational(-3))), "1/2-3i");
  EXPECT_EQ(to_string(Gaussian(make_rational(1, 2), Rational(1))), "1/2+i");
  EXPECT_EQ(to_string(Gaussian(0)), "0");
}

TEST(GaussianOrder, LexicographicOnRealThenImaginary) {
  EXPECT_LT(Gaussian(Rational(0), Rational(5)), Gaussian(1));
  EXPECT_LT(Gaussian(Rational(1), Rational(-1)), Gaussian(1));
}

}  // namespace
}  // namespace avoidance
