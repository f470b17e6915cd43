#include <gtest/gtest.h>

#include <random>

#include "vba/axioms.hpp"
#include "vba/domain.hpp"

using namespace vba;

namespace {
constexpr VarId a{0}, b{1}, c{2}, d{3};
}

TEST(Domain, SortsAndDeduplicates) {
  const Domain x{c, a, c, b};
  EXPECT_EQ(x.vars(), (std::vector<VarId>{a, b, c}));
  EXPECT_EQ(x.size(), 3u);
  EXPECT_TRUE(x.contains(b));
  EXPECT_FALSE(x.contains(d));
  EXPECT_EQ(x.position(c), 2u);
  EXPECT_EQ(x.position(d), 3u);
}

TEST(Domain, LatticeOperations) {
  const Domain x{a, b}, y{b, c};
  EXPECT_EQ(join(x, y), (Domain{a, b, c}));
  EXPECT_EQ(meet(x, y), (Domain{b}));
  EXPECT_EQ(difference(x, y), (Domain{a}));
  EXPECT_TRUE(join(x, y).includes(x));
  EXPECT_FALSE(x.includes(y));
  EXPECT_TRUE(x.includes(Domain{}));
}

TEST(Domain, LatticeLawsOnRandomSubsets) {
  Rng rng(3);
  const Domain top = Domain::first_n(6);
  for (int i = 0; i < 300; ++i) {
    const Domain x = random_subset(top, rng), y = random_subset(top, rng),
                 z = random_subset(top, rng);
    EXPECT_EQ(join(x, meet(x, y)), x);
    EXPECT_EQ(meet(x, join(x, y)), x);
    EXPECT_EQ(join(x, x), x);
    EXPECT_EQ(meet(x, x), x);
    EXPECT_EQ(join(x, y), join(y, x));
    EXPECT_EQ(meet(join(x, y), z), meet(z, join(y, x)));
    EXPECT_EQ(join(join(x, y), z), join(x, join(y, z)));
    EXPECT_EQ(meet(meet(x, y), z), meet(x, meet(y, z)));
    EXPECT_EQ(x.includes(y), join(x, y) == x);
  }
}

TEST(Domain, SubsetsAndIntervals) {
  const Domain x{a, c, d};
  const auto all = subsets(x);
  ASSERT_EQ(all.size(), 8u);
  EXPECT_EQ(all.front(), Domain{});
  EXPECT_EQ(all.back(), x);
  const auto mid = interval(Domain{a}, x);
  EXPECT_EQ(mid.size(), 4u);
  for (const auto& t : mid) EXPECT_TRUE(t.contains(a));
  EXPECT_EQ(subsets(Domain{}).size(), 1u);
}

TEST(Domain, Rendering) {
  EXPECT_EQ(to_string(Domain{a, c}), "{v0,v2}");
  EXPECT_EQ(to_string(Domain{}), "{}");
}
