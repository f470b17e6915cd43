#include <gtest/gtest.h>

#include "support.hpp"
#include "vba/errors.hpp"

using namespace vba;
using namespace vba::test;

namespace {
constexpr VarId X{0}, Y{1}, Z{2};
}

TEST(Configuration, Restrict) {
  const auto xy = cfg({X, Y}, {1, 0});
  EXPECT_EQ(restrict(xy, {X}), cfg({X}, {1}));
  EXPECT_EQ(restrict(xy, {X, Y}), xy);
  EXPECT_EQ(restrict(xy, {}), Configuration{});
  EXPECT_THROW(restrict(xy, {Z}), DomainError);
}

TEST(Configuration, RestrictComposes) {
  const auto xyz = cfg({X, Y, Z}, {1, 0, 1});
  EXPECT_EQ(restrict(restrict(xyz, {X, Z}), {Z}), restrict(xyz, {Z}));
}

TEST(Configuration, Compatible) {
  EXPECT_TRUE(compatible(cfg({X}, {1}), cfg({Y}, {0})));
  EXPECT_TRUE(compatible(cfg({X, Y}, {1, 0}), cfg({Y, Z}, {0, 1})));
  EXPECT_FALSE(compatible(cfg({X, Y}, {1, 0}), cfg({Y}, {1})));
}

TEST(Configuration, Merge) {
  EXPECT_EQ(merge(cfg({X}, {1}), cfg({Y}, {0})), cfg({X, Y}, {1, 0}));
  const Configuration single[] = {cfg({X}, {1})};
  EXPECT_EQ(merge(single), single[0]);
  EXPECT_EQ(merge(cfg({X, Y}, {1, 0}), cfg({Y, Z}, {0, 1})), cfg({X, Y, Z}, {1, 0, 1}));
  const auto xy = cfg({X, Y}, {1, 0});
  EXPECT_EQ(merge(xy, restrict(xy, {Y})), xy);
}

TEST(Configuration, MergeConflictNamesVariable) {
  try {
    merge(cfg({X, Y}, {1, 0}), cfg({Y}, {1}));
    FAIL() << "expected IncompatibleError";
  } catch (const IncompatibleError& e) {
    EXPECT_NE(std::string(e.what()).find("v1"), std::string::npos) << e.what();
  }
}

TEST(Configuration, EmptyConfigurationRendering) {
  EXPECT_EQ(to_string(Configuration{}), "<>");
  EXPECT_EQ(to_string(cfg({X, Y}, {1, 0})), "(1,0)");
}

TEST(VariableSystem, FramesAndGamma) {
  VariableSystem sys;
  const VarId u = sys.add("u", {"a", "b", "c"});
  const VarId v = sys.add("v", {"x", "y"});
  EXPECT_EQ(sys.frame_count({u, v}), 6u);
  const auto g = sys.gamma({u, v});
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g.front(), cfg({u, v}, {0, 0}));
  EXPECT_EQ(g[1], cfg({u, v}, {0, 1}));
  EXPECT_EQ(g.back(), cfg({u, v}, {2, 1}));
  EXPECT_EQ(sys.gamma({}), std::vector<Configuration>{Configuration{}});
  EXPECT_EQ(sys.format(cfg({u, v}, {1, 0})), "u=b, v=x");
  EXPECT_EQ(sys.find("v"), v);
  EXPECT_FALSE(sys.find("w"));
}

TEST(VariableSystem, RejectsBadVariables) {
  VariableSystem sys;
  sys.add("u", {"0", "1"});
  EXPECT_THROW(sys.add("u", {"0"}), Error);
  EXPECT_THROW(sys.add("w", {}), Error);
  EXPECT_THROW(sys.add("w", {"0", "0"}), Error);
}

TEST(VariableSystem, ContainsChecksFrames) {
  const auto sys = binary_system(2);
  EXPECT_TRUE(sys->contains(cfg({X, Y}, {1, 1})));
  EXPECT_FALSE(sys->contains(cfg({X}, {2})));
}

TEST(MergeFriendly, VariableSystemsPass) {
  const std::size_t sizes[] = {2, 3, 1, 2};
  const auto sys = VariableSystem::with_frame_sizes(sizes);
  Rng rng(0);
  const auto sampled = check_merge_friendly(sys, random_domain_pairs(sys.variables()), 500, rng);
  EXPECT_TRUE(sampled.passed()) << sampled.witness.value_or("");
  EXPECT_EQ(sampled.trials, 500u);
  EXPECT_TRUE(check_merge_friendly_exhaustive(sys).passed());
}

TEST(MergeFriendly, SingleVariableSystemPasses) {
  const std::size_t sizes[] = {3};
  EXPECT_TRUE(check_merge_friendly_exhaustive(VariableSystem::with_frame_sizes(sizes)).passed());
}

TEST(MergeFriendly, SupportSystemCanFail) {
  // Top set {(0,0),(1,1)}: x=0 and y=1 agree on the empty scope but no
  // configuration of the top set restricts to both.
  const SupportConfigurationSystem sys({X, Y}, {cfg({X, Y}, {0, 0}), cfg({X, Y}, {1, 1})});
  EXPECT_EQ(sys.gamma({X}).size(), 2u);
  EXPECT_FALSE(sys.compatible(cfg({X}, {0}), cfg({Y}, {1})));
  EXPECT_TRUE(sys.compatible(cfg({X}, {1}), cfg({Y}, {1})));
  const auto report = check_merge_friendly_exhaustive(sys);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(report.witness.has_value());
}

TEST(MergeFriendly, FullSupportSystemPasses) {
  std::vector<Configuration> all;
  for (Value x = 0; x < 2; ++x)
    for (Value y = 0; y < 2; ++y) all.push_back(cfg({X, Y}, {x, y}));
  EXPECT_TRUE(check_merge_friendly_exhaustive(SupportConfigurationSystem({X, Y}, all)).passed());
}

TEST(Assignments, LexicographicOrder) {
  std::vector<std::vector<Value>> seen;
  const std::size_t dims[] = {2, 3};
  for_each_assignment(dims, [&](const std::vector<Value>& v) { seen.push_back(v); });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen[1], (std::vector<Value>{0, 1}));
  EXPECT_EQ(seen[3], (std::vector<Value>{1, 0}));
  std::size_t calls = 0;
  for_each_assignment({}, [&](const std::vector<Value>& v) {
    EXPECT_TRUE(v.empty());
    ++calls;
  });
  EXPECT_EQ(calls, 1u);
}
