#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "modend/field.hpp"

using namespace modend;
using namespace modend::testing;

namespace {

FieldPtr fib_field() { return Field::make({Rational(-1), Rational(0), Rational(1), Rational(0), Rational(1)}); }

}  // namespace

TEST(Field, InverseOfGeneratorInQuadraticField) {
  auto k = Field::make({Rational(-5), Rational(0), Rational(1)});
  auto t = k->generator();
  EXPECT_EQ(k->one() / t, t / k->from_rational(Rational(5)));
}

TEST(Field, InverseOfGeneratorInQuarticField) {
  auto k = fib_field();
  auto t = k->generator();
  EXPECT_EQ(k->one() / t, t * t * t + t);
  EXPECT_TRUE((t * (t * t * t + t)).is_one());
}

TEST(Field, AddingZeroIsIdentity) {
  auto k = fib_field();
  std::mt19937 rng(1);
  for (int n = 0; n < 20; ++n) {
    auto a = random_element(rng, k);
    EXPECT_EQ(a + k->zero(), a);
  }
}

TEST(Field, DivisionByZeroThrows) {
  auto k = fib_field();
  try {
    (void)(k->one() / k->zero());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Field, ZeroDivisorInReducibleQuotientIsDetected) {
  // x^2 - 1 is reducible; theta - 1 has no inverse.
  auto k = Field::make({Rational(-1), Rational(0), Rational(1)});
  auto a = k->generator() - k->one();
  try {
    (void)a.inverse();
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDivisorDetected);
  }
}

TEST(Field, RejectsNonMonicPolynomial) {
  EXPECT_THROW(Field::make({Rational(1), Rational(2)}), Error);
  EXPECT_THROW(Field::make({Rational(3)}), Error);
}

TEST(Field, RationalTextRoundTrip) {
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(parse_rational("-2/1")), "-2");
  EXPECT_EQ(format_rational(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Field, NonReducedRationalsCompareEqual) {
  auto k = fib_field();
  mpq_class raw(2, 4);  // not canonicalized
  EXPECT_EQ(k->from_rational(raw), k->from_rational(Rational(1, 2)));
  EXPECT_EQ(k->from_coeffs({Rational(0), mpq_class(3, 6)}), k->generator() / k->from_rational(Rational(2)));
}

TEST(Field, ArithDispatch) {
  auto k = fib_field();
  auto t = k->generator();
  EXPECT_EQ(field_arith(FieldOp::Add, t, t), t + t);
  EXPECT_EQ(field_arith(FieldOp::Sub, t, t), k->zero());
  EXPECT_EQ(field_arith(FieldOp::Mul, t, t), t * t);
  EXPECT_EQ(field_arith(FieldOp::Div, t, t), k->one());
}

TEST(Field, ElementsFromDifferentFieldsDoNotMix) {
  auto a = fib_field()->one();
  auto b = Field::rationals()->one();
  EXPECT_THROW((void)(a + b), Error);
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  std::vector<FieldPtr> fields{Field::rationals(), Field::make({Rational(-2), Rational(0), Rational(1)}), fib_field()};
  std::mt19937 rng(GetParam());
  for (const auto& k : fields)
    for (int n = 0; n < 25; ++n) {
      auto a = random_element(rng, k), b = random_element(rng, k), c = random_element(rng, k);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, k->zero());
      EXPECT_EQ(a * k->one(), a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ((b / a) * a, b);
      }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FieldAxioms, ::testing::Values(1, 2, 3, 4));
