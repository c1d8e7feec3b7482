#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "support.hpp"

using namespace multiarr;
using support::Arr;

namespace {

std::map<std::set<std::size_t>, int> library_values(const EulerRestriction<Rational>& er) {
  std::map<std::set<std::size_t>, int> out;
  for (const auto& r : er.reports) out[std::set<std::size_t>(r.flat.hyperplanes.begin(), r.flat.hyperplanes.end())] = r.value;
  return out;
}

}  // namespace

TEST(EulerFastPath, ValidatesLocalData) {
  EXPECT_THROW(euler_fast_path(1, 1, 1, 2, {1}), std::invalid_argument);
  EXPECT_THROW(euler_fast_path(2, 1, 1, 3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(euler_fast_path(2, 2, 1, 2, {1, 1}), std::invalid_argument);
  EXPECT_THROW(euler_fast_path(2, 0, 1, 1, {0, 1}), std::invalid_argument);
  EXPECT_THROW(euler_fast_path(3, 2, 1, 4, {2, 1}), std::invalid_argument);
}

TEST(EulerFastPath, ApplicableCasesAgree) {
  for (int k = 2; k <= 4; ++k) {
    std::vector<int> mx(static_cast<std::size_t>(k), 1);
    for (;;) {
      const int total = std::accumulate(mx.begin(), mx.end(), 0);
      const int m0 = mx[0];
      const int m1 = *std::max_element(mx.begin() + 1, mx.end());
      const auto all = euler_fast_path_all(k, m0, m1, total, mx);
      for (const auto& v : all) EXPECT_EQ(v.value, all.front().value) << to_string(v.method);
      std::size_t i = mx.size();
      while (i > 0 && mx[i - 1] == 4) mx[--i] = 1;
      if (i == 0) break;
      ++mx[i - 1];
    }
  }
}

TEST(EulerFastPath, TwoHyperplanesGiveTheOtherMultiplicity) {
  const auto v = euler_fast_path(2, 5, 3, 8, {5, 3});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->value, 3);
  EXPECT_EQ(v->method, EulerMethod::case1);
}

TEST(EulerMultiplicity, AgreesWithLowestNonDivisibleDegree) {
  std::mt19937 rng(51);
  for (int t = 0; t < 40; ++t) {
    const auto a = support::random_arrangement(rng, 3, 4 + t % 3, 3, 2, 12);
    const auto o = support::to_oracle(a);
    for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
      EulerOptions opt;
      opt.cross_check = true;
      opt.check_all_cases = true;
      const auto er = euler_restriction(a, h0, opt);
      EXPECT_EQ(library_values(er), oracle::euler_restriction(o, h0)) << a.to_string() << " H0=" << h0;
    }
  }
}

TEST(EulerMultiplicity, FallbackAloneGivesTheSameRestriction) {
  std::mt19937 rng(52);
  for (int t = 0; t < 30; ++t) {
    const auto a = support::random_arrangement(rng, 3, 5, 4, 2);
    EulerOptions slow;
    slow.use_fast_path = false;
    for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
      const auto fast = euler_restriction(a, h0);
      const auto ref = euler_restriction(a, h0, slow);
      EXPECT_EQ(fast.restriction.arrangement, ref.restriction.arrangement);
      for (const auto& r : ref.reports) EXPECT_EQ(r.method, EulerMethod::fallback);
    }
  }
}

TEST(EulerMultiplicity, PositiveCharacteristicUsesFallback) {
  const auto a = catalogue::a3<ModP<32003>>({2, 1, 1, 1, 2, 1});
  const auto er = euler_restriction(a, catalogue::a3_index(a, 4));
  for (const auto& r : er.reports) EXPECT_EQ(r.method, EulerMethod::fallback);
  EXPECT_EQ(er.restriction.arrangement.mults(), (std::vector<int>{2, 2, 2}));
}

TEST(EulerMultiplicity, PencilDependsOnXi) {
  for (long xi : {-1L, 2L, 3L, 5L, -2L}) {
    const auto a = catalogue::pencil(Rational(xi));
    const std::size_t h0 = a.index_of({Integer(1), Integer(0)});
    const auto flats = rank2_flats(a, h0);
    ASSERT_EQ(flats.size(), 1u);
    const auto r = euler_multiplicity(a, h0, flats.front());
    EXPECT_EQ(r.value, xi == -1 ? 5 : 4) << "xi=" << xi;
    EXPECT_EQ(r.method, EulerMethod::fallback);
    EXPECT_EQ(r.k, 4);
    EXPECT_EQ(r.m0, 4);
    EXPECT_EQ(r.total, 9);
  }
}

TEST(EulerRestriction, A3AtTheDoubledHyperplane) {
  const auto a = catalogue::a3({2, 1, 1, 1, 2, 1});
  const auto er = euler_restriction(a, catalogue::a3_index(a, 4));
  EXPECT_EQ(er.restriction.arrangement.mults(), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(er.total_star, 6);
  EXPECT_EQ(rank2_exponents(er.restriction.arrangement), (std::array<int, 2>{3, 3}));
}

TEST(EulerRestriction, BooleanRestrictionKeepsMultiplicities) {
  const auto a = catalogue::boolean(3, {3, 1, 2});
  const auto er = euler_restriction(a, 0);
  ASSERT_EQ(er.reports.size(), 2u);
  for (const auto& r : er.reports) EXPECT_EQ(r.method, EulerMethod::case1);
  EXPECT_EQ(er.restriction.arrangement, catalogue::boolean(2, {3, 1}));
}

TEST(EulerRestriction, PsiDegreeIsAtLeastM0) {
  std::mt19937 rng(53);
  for (int t = 0; t < 60; ++t) {
    const auto a = support::random_arrangement(rng, 3, 4 + t % 3, 4, 2);
    for (std::size_t h0 = 0; h0 < a.size(); ++h0)
      for (const auto& r : euler_restriction(a, h0).reports) {
        EXPECT_GE(psi_degree(r), r.m0);
        EXPECT_GE(r.value, 0);
        EXPECT_LE(r.value, r.total - r.m0);
      }
  }
}

TEST(BPolynomial, DegreeIsDeletionMinusRestrictionTotal) {
  std::mt19937 rng(54);
  for (int t = 0; t < 40; ++t) {
    const auto a = support::random_arrangement(rng, 3, 5, 3, 2);
    for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
      const auto er = euler_restriction(a, h0);
      EXPECT_EQ(b_polynomial(a, h0, er).degree(), a.total() - 1 - er.total_star);
    }
  }
}

TEST(BPolynomial, DeletionBasisLandsInTheIdeal) {
  // For a free deletion (A', m'), every theta in D(A', m') has
  // theta(alpha0) in (alpha0^m0, B).
  const std::vector<std::vector<int>> ms{{1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1}, {2, 1, 2, 2, 1, 1}, {3, 1, 1, 2, 1, 1}};
  for (const auto& m : ms) {
    const auto a = catalogue::a3(m);
    for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
      const auto del = deletion(a, h0);
      const auto cert = decide_freeness(del);
      if (!cert.is_free()) continue;
      const auto er = euler_restriction(a, h0);
      for (const auto& th : cert.basis) EXPECT_TRUE(in_b_ideal(a, h0, er, th)) << th.to_string();
    }
  }
}
