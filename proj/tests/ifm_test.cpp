#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace multiarr;

namespace {

// Exponents recomputed bottom-up from leaves that the oracle certifies.
std::vector<int> replay(const IFMNode<Rational>& n) {
  if (n.kind != IFMKind::addition) {
    const auto o = support::to_oracle(n.arrangement);
    std::vector<oracle::Derivation> ob;
    for (const auto& th : n.basis) {
      ob.push_back(support::to_oracle(th));
      EXPECT_TRUE(oracle::member(o, ob.back()));
    }
    EXPECT_TRUE(oracle::proportional(oracle::saito_det(ob, o.dim), oracle::defining(o)));
    return n.exponents;
  }
  EXPECT_EQ(n.deletion->arrangement, deletion(n.arrangement, n.host));
  EXPECT_EQ(n.restriction->arrangement, euler_restriction(n.arrangement, n.host).restriction.arrangement);
  const auto de = replay(*n.deletion);
  const auto re = replay(*n.restriction);
  const auto d = leftover(de, re);
  EXPECT_TRUE(d.has_value());
  if (!d) return {};
  const auto e = replace_one(de, *d, *d + 1);
  EXPECT_EQ(e, n.exponents);
  return e;
}

}  // namespace

TEST(IFM, A3WithTwoDoubledHyperplanesHasATree) {
  const auto a = catalogue::a3({1, 1, 2, 2, 1, 1});
  const auto r = inductively_free(a);
  ASSERT_TRUE(r.tree);
  EXPECT_EQ(r.tree->exponents, (std::vector<int>{2, 3, 3}));
  EXPECT_EQ(replay(*r.tree), (std::vector<int>{2, 3, 3}));
  EXPECT_EQ(r.tree->arrangement, a);
}

TEST(IFM, NonFreeA3HasNoTreeAndTheSearchIsExhaustive) {
  const auto r = inductively_free(catalogue::a3({2, 1, 1, 1, 2, 1}));
  EXPECT_FALSE(r.tree);
  EXPECT_TRUE(r.exhaustive);
}

TEST(IFM, BooleanArrangementsAlwaysHaveTrees) {
  for (const std::vector<int>& m : {std::vector<int>{1, 1, 1}, {3, 1, 2}, {2, 4, 1}, {3, 3, 3}}) {
    const auto r = inductively_free(catalogue::boolean(3, m));
    ASSERT_TRUE(r.tree);
    auto s = m;
    std::sort(s.begin(), s.end());
    EXPECT_EQ(replay(*r.tree), s);
  }
}

TEST(IFM, TinyBudgetReportsExhaustion) {
  const auto r = inductively_free(catalogue::a3({1, 1, 2, 2, 1, 1}), 1);
  EXPECT_FALSE(r.tree);
  EXPECT_FALSE(r.exhaustive);
}

TEST(IFM, TreesImplyFreenessWithTheSameExponents) {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> m(1, 3);
  int found = 0;
  for (int t = 0; t < 25; ++t) {
    std::vector<int> mult(6);
    for (auto& x : mult) x = m(rng);
    const auto a = catalogue::a3(mult);
    const auto r = inductively_free(a);
    const auto c = decide_freeness(a);
    if (r.tree) {
      ++found;
      ASSERT_TRUE(c.is_free());
      EXPECT_EQ(r.tree->exponents, c.exponents);
    }
    if (c.verdict == Verdict::not_free) { EXPECT_FALSE(r.tree); }
  }
  EXPECT_GT(found, 0);
}

TEST(IFM, RankTwoInputIsALeaf) {
  const auto a = support::Arr::normalize(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {2, 2, 1});
  const auto r = inductively_free(a);
  ASSERT_TRUE(r.tree);
  EXPECT_EQ(r.tree->kind, IFMKind::small_rank);
  EXPECT_EQ(r.tree->node_count(), 1u);
}
