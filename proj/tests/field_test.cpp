#include <gtest/gtest.h>

#include "multiarr/field.hpp"

using namespace multiarr;

static_assert(Field<Rational>);
static_assert(Field<ModP<7>>);
static_assert(Field<ModP<32003>>);

TEST(ModP, EveryNonzeroElementInvertsAndSatisfiesFermat) {
  for (long long a = 1; a < 7; ++a) {
    ModP<7> x(a);
    EXPECT_EQ((x * x.inverse()).value(), 1u);
    EXPECT_EQ(x.pow(6).value(), 1u);
  }
  for (long long a = 1; a < 32003; a += 997) EXPECT_EQ((ModP<32003>(a) * ModP<32003>(a).inverse()).value(), 1u);
}

TEST(ModP, ReducesNegativeValues) {
  EXPECT_EQ(ModP<5>(-1).value(), 4u);
  EXPECT_EQ(ModP<5>(-10).value(), 0u);
  EXPECT_EQ(field_traits<ModP<5>>::from_integer(Integer("-123456789012345678901")).value(),
            ModP<5>(-1).value());  // ...901 = 1 mod 5
  EXPECT_EQ((-ModP<3>(1)).value(), 2u);
}

TEST(ModP, InverseOfZeroThrows) { EXPECT_THROW(ModP<3>(0).inverse(), std::domain_error); }

TEST(RationalTraits, CanonicalFormIsPrimitiveWithPositiveLead) {
  using T = field_traits<Rational>;
  EXPECT_EQ(T::canonical_form(std::vector<Integer>{2, -4, 6}), (std::vector<Integer>{1, -2, 3}));
  EXPECT_EQ(T::canonical_form(std::vector<Integer>{0, -3, 6}), (std::vector<Integer>{0, 1, -2}));
  EXPECT_EQ(T::canonical_form(std::vector<Rational>{Rational(1, 2), Rational(-1, 3)}), (std::vector<Integer>{3, -2}));
  EXPECT_THROW(T::canonical_form(std::vector<Integer>{0, 0}), std::invalid_argument);
}

TEST(RationalTraits, ParseAcceptsFractionsAndRejectsJunk) {
  using T = field_traits<Rational>;
  EXPECT_EQ(T::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(T::parse("7"), Rational(7));
  EXPECT_THROW(T::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(T::parse("abc"), std::invalid_argument);
  EXPECT_THROW(T::parse(""), std::invalid_argument);
}

TEST(ModPTraits, CanonicalFormHasLeadingOne) {
  using T = field_traits<ModP<5>>;
  EXPECT_EQ(T::canonical_form(std::vector<Integer>{0, 2, 3}), (std::vector<Integer>{0, 1, 4}));
  EXPECT_EQ(T::canonical_form(std::vector<Integer>{-1, 1}), (std::vector<Integer>{1, 4}));
  EXPECT_THROW(T::canonical_form(std::vector<Integer>{5, 10}), std::invalid_argument);
  EXPECT_EQ(T::name(), "gf(5)");
}

TEST(Binomial, ReducesExactValue) {
  EXPECT_EQ(binomial<Rational>(10, 3), Rational(120));
  EXPECT_EQ(binomial<ModP<7>>(10, 3).value(), 120u % 7);
  EXPECT_EQ(binomial<ModP<3>>(3, 1).value(), 0u);
}
