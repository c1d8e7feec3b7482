#include <gtest/gtest.h>

#include "support.hpp"

using namespace multiarr;

TEST(Reproduce, EveryBundledTableMatches) {
  for (const auto& id : reproduce_ids()) {
    const auto t = reproduce(id);
    EXPECT_TRUE(t.passed()) << id;
    for (const auto& r : t.rows) EXPECT_TRUE(r.pass) << id << ": " << r.claim << " expected " << r.expected << " observed " << r.observed;
  }
}

TEST(Reproduce, NumericAliasesResolve) {
  EXPECT_EQ(reproduce("4.2").id, "pencil");
  EXPECT_EQ(reproduce("5.5").id, "a3");
  EXPECT_THROW(reproduce("9.9"), std::out_of_range);
}
