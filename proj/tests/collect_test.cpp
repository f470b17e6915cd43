#include <gtest/gtest.h>

#include "support.hpp"
#include "vba/collect.hpp"
#include "vba/errors.hpp"
#include "vba/oracle.hpp"
#include "vba/sampling.hpp"

using namespace vba;
using namespace vba::test;

TEST(Collect, SingleNode) {
  MaxPlusFixture fx;
  const std::vector<Table> one{fx.factors[1]};
  const auto t = build_covering_join_tree(fx.alg, std::span(one), {});
  ASSERT_EQ(t.size(), 1u);
  const auto r = collect(fx.alg, t, std::span(one));
  EXPECT_TRUE(fx.alg.equal(r.collected[0], one[0], 0));
  EXPECT_FALSE(r.message[0].has_value());
}

TEST(Collect, RootOverBothVariables) {
  MaxPlusFixture fx;
  const auto t = build_covering_join_tree(fx.alg, std::span(fx.factors), {Heuristic::given, {U, V}});
  EXPECT_EQ(t.label(t.root()), (Domain{U, V}));
  const auto r = collect(fx.alg, t, std::span(fx.factors));
  EXPECT_EQ(fx.alg.values(r.collected[t.root()]), (std::vector<double>{3, 6, 5, 8}));
}

TEST(Collect, RootOverU) {
  MaxPlusFixture fx;
  const auto t = build_covering_join_tree(fx.alg, std::span(fx.factors), {Heuristic::given, {V, U}});
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.label(t.root()), (Domain{U}));
  const auto r = collect(fx.alg, t, std::span(fx.factors));
  EXPECT_EQ(fx.alg.values(r.collected[t.root()]), (std::vector<double>{6, 8}));
  for (NodeId i = 0; i < t.size(); ++i) {
    if (!t.parent(i)) continue;
    ASSERT_TRUE(r.message[i].has_value());
    EXPECT_EQ(fx.alg.label(*r.message[i]), t.separator(i));
  }
}

TEST(Collect, RejectsMismatchedFactors) {
  MaxPlusFixture fx;
  const auto t = build_covering_join_tree(fx.alg, std::span(fx.factors), {});
  const std::vector<Table> fewer{fx.factors[0]};
  EXPECT_THROW(collect(fx.alg, t, std::span(fewer)), ConfigError);
  const std::vector<Table> swapped{fx.factors[1], fx.factors[0]};
  EXPECT_THROW(collect(fx.alg, t, std::span(swapped)), ConfigError);
}

TEST(Collect, RequiresTightLabels) {
  MaxPlusFixture fx;
  const std::vector<Table> one{fx.factors[0]};
  const CoveringJoinTree loose({Domain{U, V}}, {std::nullopt}, {Domain{U}}, {0});
  EXPECT_THROW(collect(fx.alg, loose, std::span(one)), ConfigError);
  EXPECT_NO_THROW(collect(fx.alg, tighten(loose), std::span(one)));
}

TEST(QueryMarginal, Examples) {
  MaxPlusFixture fx;
  EXPECT_EQ(fx.alg.values(query_marginal(fx.alg, std::span(fx.factors), {U})),
            (std::vector<double>{6, 8}));
  EXPECT_EQ(fx.alg.values(query_marginal(fx.alg, std::span(fx.factors), {V})),
            (std::vector<double>{5, 8}));
  const std::vector<Table> one{fx.factors[1]};
  EXPECT_TRUE(fx.alg.equal(query_marginal(fx.alg, std::span(one), {U, V}), one[0], 0));
  EqualityFixture eq;
  const std::vector<Table> phi{eq.phi};
  EXPECT_EQ(eq.alg.values(query_marginal(eq.alg, std::span(phi), {})), std::vector<double>{1});
  EXPECT_THROW(query_marginal(fx.alg, std::span(one), {W}), DomainError);
}

TEST(QueryMarginal, MatchesOracleOnRandomProblems) {
  Rng rng(9);
  for (Semiring s : {Semiring::boolean, Semiring::max_plus, Semiring::min_plus, Semiring::max_times}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto p = random_table_problem(rng, s, {});
      Domain all;
      for (const auto& f : p.factors) all = join(all, f.scope());
      const Domain query = random_scope(all, 0, 3, rng);
      const auto got = query_marginal(p.algebra, std::span(p.factors), query);
      const auto want = brute_marginal(p.algebra, std::span(p.factors), query);
      ASSERT_TRUE(p.algebra.equal(got, want, p.algebra.default_tolerance()))
          << to_string(s) << ": " << p.algebra.describe(got) << " vs " << p.algebra.describe(want);
    }
  }
}

TEST(Collect, EveryNodeHoldsItsSubtreeMarginal) {
  Rng rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_sparse_problem(rng, {});
    const auto t = build_covering_join_tree(p.algebra, std::span(p.factors), {});
    const auto r = collect(p.algebra, t, std::span(p.factors));
    for (NodeId i = 0; i < t.size(); ++i) {
      std::vector<SparsePotential> below;
      for (NodeId j : t.subtree(i))
        for (std::size_t f : t.factors_at(j)) below.push_back(p.factors[f]);
      const auto want = brute_marginal(p.algebra, std::span(below), t.label(i));
      ASSERT_TRUE(p.algebra.equal(r.collected[i], want, 1e-9)) << "node " << i;
    }
  }
}
