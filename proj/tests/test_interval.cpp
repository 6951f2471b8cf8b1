#include <gtest/gtest.h>

#include "fchrom/interval.hpp"
#include "fchrom/rational.hpp"
#include "oracles.hpp"

using namespace fchrom;

namespace {

void expect_encloses(const Interval& iv, const oracle::BigFloat& truth) {
  EXPECT_LE(oracle::to_big(iv.lo()), truth);
  EXPECT_GE(oracle::to_big(iv.hi()), truth);
  EXPECT_LT(iv.width(), Rational(Integer(1), Integer(1) << 120));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(Rational(10, 4)), "5/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("0.5"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
  EXPECT_THROW(parse_rational("1/"), InvalidArgument);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(floor_of(Rational(4)), 4);
  EXPECT_EQ(ceil_of(Rational(7, 2)), 4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
}

TEST(Interval, ArithmeticEnclosesAllCombinations) {
  const Interval a(Rational(-1), Rational(2));
  const Interval b(Rational(3), Rational(5));
  EXPECT_EQ(a + b, Interval(Rational(2), Rational(7)));
  EXPECT_EQ(a - b, Interval(Rational(-6), Rational(-1)));
  EXPECT_EQ(a * b, Interval(Rational(-5), Rational(10)));
  EXPECT_EQ(a / b, Interval(Rational(-1, 3), Rational(2, 3)));
  EXPECT_THROW(b / a, InvalidArgument);
  EXPECT_THROW(Interval(Rational(2), Rational(1)), InvalidArgument);
}

TEST(Interval, OutwardRoundingContainsOriginal) {
  const Interval third(Rational(1, 3));
  const Interval rounded = third.rounded_outward(32);
  EXPECT_TRUE(rounded.contains(Rational(1, 3)));
  EXPECT_FALSE(rounded.is_point());
  EXPECT_LE(rounded.width(), Rational(Integer(1), Integer(1) << 31));
}

TEST(Transcendental, LogarithmsEncloseHighPrecisionValues) {
  for (const auto& q : {Rational(2), Rational(1, 2), Rational(5, 2), Rational(8), Rational(97, 13), Rational(1, 1000)}) {
    using boost::multiprecision::log;
    expect_encloses(ln(q), log(oracle::to_big(q)));
  }
  EXPECT_EQ(ln(Rational(1)), Interval(Rational(0)));
  EXPECT_THROW(ln(Rational(0)), InvalidArgument);
}

TEST(Transcendental, ExpAndE) {
  using boost::multiprecision::exp;
  expect_encloses(euler_e(), exp(oracle::BigFloat(1)));
  for (const auto& x : {Rational(-3), Rational(1, 7), Rational(5, 2), Rational(-1, 2)})
    expect_encloses(fchrom::exp(x), exp(oracle::to_big(x)));
}

TEST(Transcendental, LogOfETimesS) {
  // log_2(4e) = 2 + log_2 e, the corollary term for t = 4, p = 1/2.
  const Interval v = log_base_of_e_times(Rational(4), Rational(2));
  expect_encloses(v, oracle::log_e_times(Rational(4), Rational(1, 2)));
  EXPECT_GT(v.lo(), Rational(3442, 1000));
  EXPECT_LT(v.hi(), Rational(3443, 1000));
}

TEST(Transcendental, PowIsExactWhenRational) {
  EXPECT_EQ(fchrom::pow(Rational(1, 4), Rational(1, 2)), Interval(Rational(1, 2)));
  EXPECT_EQ(fchrom::pow(Rational(1, 2), Rational(2)), Interval(Rational(1, 4)));
  EXPECT_EQ(fchrom::pow(Rational(8, 27), Rational(2, 3)), Interval(Rational(4, 9)));
  using boost::multiprecision::sqrt;
  const Interval root_half = fchrom::pow(Rational(1, 2), Rational(1, 2));
  EXPECT_FALSE(root_half.is_point());
  expect_encloses(root_half, sqrt(oracle::BigFloat(0.5)));
  using boost::multiprecision::pow;
  expect_encloses(fchrom::pow(Rational(3, 10), Rational(1001, 997)),
                  pow(oracle::to_big(Rational(3, 10)), oracle::to_big(Rational(1001, 997))));
}
