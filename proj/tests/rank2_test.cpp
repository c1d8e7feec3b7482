#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace multiarr;
using support::Arr;

TEST(Rank2, ExponentsMatchHilbertFunctionOracle) {
  std::mt19937 rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto a = support::random_arrangement(rng, 2, 2 + t % 4, 5, 3, 14);
    const auto e = rank2_exponents(a);
    const auto ref = oracle::plane_exponents(support::to_oracle(a));
    EXPECT_EQ(e[0], ref[0]) << a.to_string();
    EXPECT_EQ(e[1], ref[1]) << a.to_string();
  }
}

TEST(Rank2, KnownExponents) {
  // Coordinate lines: x1^a d1, x2^b d2.
  EXPECT_EQ(rank2_exponents(catalogue::boolean(2, {4, 2})), (std::array<int, 2>{2, 4}));
  // Three lines with multiplicity 1: Euler derivation plus a degree-2 field.
  EXPECT_EQ(rank2_exponents(Arr::normalize(2, {{1, 0}, {0, 1}, {1, 1}}, {1, 1, 1})), (std::array<int, 2>{1, 2}));
  // Three lines, balanced multiplicities: exponents split |m| evenly.
  EXPECT_EQ(rank2_exponents(Arr::normalize(2, {{1, 0}, {0, 1}, {1, 1}}, {3, 3, 3})), (std::array<int, 2>{4, 5}));
  // One dominant multiplicity: m0 and the rest.
  EXPECT_EQ(rank2_exponents(Arr::normalize(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {7, 1, 1, 1})), (std::array<int, 2>{3, 7}));
}

TEST(Rank2, BasisSatisfiesSaitoCriterionIndependently) {
  std::mt19937 rng(42);
  for (int t = 0; t < 25; ++t) {
    const auto a = support::random_arrangement(rng, 2, 2 + t % 4, 4, 3, 12);
    const auto b = rank2_basis(a);
    const auto o = support::to_oracle(a);
    std::vector<oracle::Derivation> ob;
    for (const auto& th : b.basis) {
      ob.push_back(support::to_oracle(th));
      EXPECT_TRUE(oracle::member(o, ob.back()));
    }
    oracle::Q c;
    ASSERT_TRUE(oracle::proportional(oracle::saito_det(ob, 2), oracle::defining(o), &c));
    EXPECT_EQ(c, b.scalar);
    EXPECT_EQ(b.basis[0].degree(), b.exponents[0]);
    EXPECT_EQ(b.basis[1].degree(), b.exponents[1]);
  }
}

TEST(Rank2, RejectsNonPlaneInput) { EXPECT_THROW(rank2_exponents(catalogue::a3()), ArrangementError); }

TEST(SmallRank, BasisOfRankTwoArrangementInThreeSpace) {
  std::mt19937 rng(43);
  for (int t = 0; t < 15; ++t) {
    const auto base = support::random_arrangement(rng, 2, 3, 3, 2);
    std::vector<std::pair<std::vector<Integer>, int>> raw;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const auto& c = base.form(i).coeffs;
      raw.push_back({{c[0], c[0] + c[1], 2 * c[1]}, base.mult(i)});
    }
    const auto a = Arr::normalize(3, raw);
    ASSERT_EQ(a.rank(), 2u);
    const auto b = small_rank_basis(a);
    ASSERT_EQ(b.basis.size(), 3u);
    EXPECT_EQ(b.exponents.front(), 0);
    const auto o = support::to_oracle(a);
    std::vector<oracle::Derivation> ob;
    for (const auto& th : b.basis) {
      ob.push_back(support::to_oracle(th));
      EXPECT_TRUE(oracle::member(o, ob.back()));
    }
    EXPECT_TRUE(oracle::proportional(oracle::saito_det(ob, 3), oracle::defining(o)));
  }
}

TEST(SmallRank, RankOneAndEmpty) {
  const auto one = Arr::normalize(3, {{1, 2, 0}}, {3});
  EXPECT_EQ(small_rank_basis(one).exponents, (std::vector<int>{0, 0, 3}));
  EXPECT_EQ(small_rank_basis(Arr(2)).exponents, (std::vector<int>{0, 0}));
}

TEST(ThetaPsi, SplitsIntoNonDivisibleAndDivisiblePart) {
  std::mt19937 rng(44);
  for (int t = 0; t < 40; ++t) {
    const auto a = support::random_arrangement(rng, 2, 2 + t % 3, 5, 3, 14);
    for (std::size_t h = 0; h < a.size(); ++h) {
      const auto s = theta_psi_split(a, h);
      EXPECT_EQ(s.e + s.d, a.total());
      const auto alpha0 = a.alpha(h);
      bool theta_div = true, psi_div = true;
      for (std::size_t i = 0; i < 2; ++i) {
        theta_div = theta_div && divisible_by_form_power(s.theta.component(i), alpha0, 1);
        psi_div = psi_div && divisible_by_form_power(s.psi.component(i), alpha0, 1);
      }
      EXPECT_FALSE(theta_div);
      EXPECT_TRUE(psi_div);
      EXPECT_TRUE(is_member(a, s.theta_ambient));
      EXPECT_TRUE(is_member(a, s.psi_ambient));
      // Compare with the lowest degree of a non-divisible derivation.
      auto o = support::to_oracle(a);
      std::swap(o.forms[0], o.forms[h]);
      std::swap(o.mults[0], o.mults[h]);
      EXPECT_EQ(s.e, oracle::euler_multiplicity_2d(o)) << a.to_string() << " H0=" << h;
    }
  }
}
