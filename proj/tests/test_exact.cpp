#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rotstate/half_int.hpp"
#include "rotstate/sqrt_rational.hpp"
#include "rotstate/sqrt_sum.hpp"

using rotstate::HalfInt;
using rotstate::SignedSqrtRational;
using rotstate::SqrtSum;

namespace {

HalfInt half(int twice) { return HalfInt::from_twice(twice); }

TEST(HalfIntTest, BasicArithmeticAndOrdering) {
  EXPECT_EQ(HalfInt(1).twice(), 2);
  EXPECT_EQ(half(3).to_double(), 1.5);
  EXPECT_TRUE(half(3) + half(1) == HalfInt(2));
  EXPECT_TRUE(HalfInt(2) - half(1) == half(3));
  EXPECT_LT(half(1), HalfInt(1));
  EXPECT_TRUE(HalfInt(3).is_integer());
  EXPECT_FALSE(half(3).is_integer());
  EXPECT_EQ(half(3).to_string(), "3/2");
  EXPECT_EQ(HalfInt(2).to_string(), "2");
}

TEST(HalfIntTest, ProjectionValidity) {
  EXPECT_TRUE(half(1).is_projection_of(half(3)));
  EXPECT_TRUE(half(-3).is_projection_of(half(3)));
  EXPECT_FALSE(half(5).is_projection_of(half(3)));   // |m| > j
  EXPECT_FALSE(HalfInt(0).is_projection_of(half(1)));  // parity mismatch
}

TEST(SignedSqrtRationalTest, CanonicalPartsAndRendering) {
  SignedSqrtRational v = SignedSqrtRational::sqrt_of(mpq_class(27, 25));
  auto [coeff, d] = v.canonical_parts();
  EXPECT_EQ(coeff, mpq_class(3, 5));
  EXPECT_EQ(d, 3);
  EXPECT_EQ(v.to_string(), "3/5*sqrt(3)");

  SignedSqrtRational w(-1, mpq_class(121, 400));
  EXPECT_EQ(w.to_string(), "-11/20");
  EXPECT_EQ(*w.as_rational(), mpq_class(-11, 20));

  EXPECT_EQ(SignedSqrtRational().to_string(), "0");
  EXPECT_EQ(SignedSqrtRational::sqrt_of(mpq_class(4, 5)).to_string(),
            "2/5*sqrt(5)");
}

TEST(SignedSqrtRationalTest, ArithmeticAndFloatView) {
  SignedSqrtRational a = SignedSqrtRational::sqrt_of(mpq_class(1, 2));
  SignedSqrtRational b = SignedSqrtRational::sqrt_of(mpq_class(2));
  EXPECT_EQ(a * b, SignedSqrtRational::of_rational(mpq_class(1)));
  EXPECT_EQ(b / a, SignedSqrtRational::of_rational(mpq_class(2)));
  EXPECT_EQ((-a) * b, SignedSqrtRational::of_rational(mpq_class(-1)));
  EXPECT_NEAR(a.to_double(), 0.7071067811865476, 1e-16);
  EXPECT_NEAR(b.to_double() * b.to_double(), 2.0, 1e-15);
}

TEST(SignedSqrtRationalTest, RejectsInvalidInput) {
  EXPECT_THROW(SignedSqrtRational(2, mpq_class(1)), std::domain_error);
  EXPECT_THROW(SignedSqrtRational(1, mpq_class(-1)), std::domain_error);
  EXPECT_THROW(SignedSqrtRational::sqrt_of(mpq_class(-3)), std::domain_error);
}

TEST(SqrtSumTest, FieldArithmetic) {
  SqrtSum r3 = SqrtSum::sqrt_of(mpq_class(3));
  SqrtSum r5 = SqrtSum::sqrt_of(mpq_class(5));
  SqrtSum r15 = SqrtSum::sqrt_of(mpq_class(15));

  // (sqrt3 + sqrt5)^2 = 8 + 2*sqrt15
  SqrtSum lhs = (r3 + r5) * (r3 + r5);
  SqrtSum rhs = SqrtSum(8) + SqrtSum(2) * r15;
  EXPECT_EQ(lhs, rhs);

  // 1/(sqrt3 + sqrt5) = (sqrt5 - sqrt3)/2
  SqrtSum inv = SqrtSum(1) / (r3 + r5);
  EXPECT_EQ(inv, (r5 - r3) / SqrtSum(2));

  // distributivity on a mixed-radical product
  SqrtSum a = r3 - SqrtSum(mpq_class(7, 2)) * r5 + SqrtSum(mpq_class(1, 3));
  SqrtSum b = r15 + SqrtSum(2);
  SqrtSum c = r5 - SqrtSum(mpq_class(5, 4)) * r3;
  EXPECT_EQ((a + b) * c, a * c + b * c);
  EXPECT_EQ((a * b) / b, a);
}

TEST(SqrtSumTest, ExactSign) {
  SqrtSum r2 = SqrtSum::sqrt_of(mpq_class(2));
  // continued-fraction convergents of sqrt2 straddle it
  EXPECT_EQ((SqrtSum(mpq_class(7, 5)) - r2).sign(), -1);
  EXPECT_EQ((SqrtSum(mpq_class(99, 70)) - r2).sign(), 1);
  EXPECT_EQ((r2 - r2).sign(), 0);

  SqrtSum r3 = SqrtSum::sqrt_of(mpq_class(3));
  SqrtSum r5 = SqrtSum::sqrt_of(mpq_class(5));
  SqrtSum r15 = SqrtSum::sqrt_of(mpq_class(15));
  EXPECT_EQ((r3 + r5 - r15 + SqrtSum(1)).sign(), 1);
  EXPECT_EQ((r3 + r5 - r15 - SqrtSum(mpq_class(1, 10))).sign(), -1);
  // exact cancellation across three radicals
  EXPECT_EQ(((r3 + r5) * (r3 + r5) - SqrtSum(8) - SqrtSum(2) * r15).sign(), 0);
}

TEST(SqrtSumTest, SingleTermViewAndConversion) {
  SignedSqrtRational v(-1, mpq_class(27, 25));
  SqrtSum s(v);
  auto back = s.as_single_sqrt();
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, v);

  SqrtSum multi = SqrtSum::sqrt_of(mpq_class(3)) + SqrtSum::sqrt_of(mpq_class(5));
  EXPECT_FALSE(multi.as_single_sqrt().has_value());
  EXPECT_TRUE(SqrtSum().as_single_sqrt().has_value());
}

TEST(SqrtSumTest, StringRoundTrip) {
  SqrtSum a = SqrtSum(mpq_class(-2, 3)) * SqrtSum::sqrt_of(mpq_class(3)) +
              SqrtSum(mpq_class(1, 5)) - SqrtSum::sqrt_of(mpq_class(7));
  EXPECT_EQ(SqrtSum::parse(a.to_string()), a);
  EXPECT_EQ(SqrtSum::parse("0"), SqrtSum());
  EXPECT_EQ(SqrtSum::parse("-11/20"), SqrtSum(mpq_class(-11, 20)));
  EXPECT_EQ(SqrtSum::parse("2/5*sqrt(5)"),
            SqrtSum(SignedSqrtRational::sqrt_of(mpq_class(4, 5))));
  EXPECT_EQ(SqrtSum::parse("sqrt(3)"), SqrtSum::sqrt_of(mpq_class(3)));
  EXPECT_EQ(SqrtSum::parse("-sqrt(3) + 1"),
            SqrtSum(1) - SqrtSum::sqrt_of(mpq_class(3)));
}

TEST(SqrtSumTest, FloatView) {
  SqrtSum a = SqrtSum(mpq_class(3, 5)) * SqrtSum::sqrt_of(mpq_class(3));
  EXPECT_NEAR(a.to_double(), 3.0 / 5.0 * std::sqrt(3.0), 1e-15);
  EXPECT_EQ(SqrtSum().to_double(), 0.0);
}

// Randomized field laws over the primes {2,3,5,7,11}: ring identities,
// division round-trips, sign against a float witness, parse round-trips.
TEST(SqrtSumTest, RandomizedFieldLaws) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  const long primes[] = {1, 2, 3, 5, 7, 11};
  auto random_element = [&] {
    SqrtSum x;
    for (long d : primes)
      if (coeff(rng) > 3)
        x += SqrtSum(mpq_class(coeff(rng), den(rng))) *
             SqrtSum::sqrt_of(mpq_class(d));
    return x;
  };
  for (int rep = 0; rep < 300; ++rep) {
    SqrtSum a = random_element(), b = random_element(), c = random_element();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, SqrtSum());
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(SqrtSum::parse(a.to_string()), a);
    double approx = a.to_double();
    if (std::abs(approx) > 1e-9)
      EXPECT_EQ(a.sign(), approx > 0 ? 1 : -1);
    EXPECT_EQ((a * a).sign(), a.is_zero() ? 0 : 1);
  }
}

}  // namespace
