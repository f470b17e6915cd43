#include <gtest/gtest.h>

#include "support.hpp"
#include "vba/errors.hpp"
#include "vba/oracle.hpp"
#include "vba/sampling.hpp"

using namespace vba;
using namespace vba::test;

TEST(Oracle, MarginalExamples) {
  MaxPlusFixture fx;
  const std::span<const Table> fs(fx.factors);
  EXPECT_EQ(fx.alg.values(brute_marginal(fx.alg, fs, {U})), (std::vector<double>{6, 8}));
  EXPECT_EQ(fx.alg.values(brute_marginal(fx.alg, fs, {U, V})), (std::vector<double>{3, 6, 5, 8}));
  EXPECT_EQ(fx.alg.values(brute_marginal(fx.alg, fs, {})), std::vector<double>{8});
  EXPECT_EQ(brute_optimum(fx.alg, fs), 8);
}

TEST(Oracle, Solutions) {
  EqualityFixture eq;
  const std::vector<Table> phi{eq.phi};
  EXPECT_EQ(brute_solutions(eq.alg, std::span(phi)),
            (std::vector<Configuration>{cfg({U, V}, {0, 0}), cfg({U, V}, {1, 1})}));
  MaxPlusFixture fx;
  EXPECT_EQ(brute_solutions(fx.alg, std::span(fx.factors)),
            (std::vector<Configuration>{cfg({U, V}, {1, 1})}));
  const std::vector<Table> constant{fx.alg.make({U, V}, {7, 7, 7, 7})};
  EXPECT_EQ(brute_solutions(fx.alg, std::span(constant)).size(), 4u);
}

TEST(Oracle, RefusesHugeStateSpaces) {
  const std::vector<std::size_t> sizes(24, 2);
  auto sys = std::make_shared<const VariableSystem>(VariableSystem::with_frame_sizes(sizes));
  TableAlgebra alg(sys, Semiring::max_plus);
  std::vector<Table> fs;
  for (std::uint32_t i = 0; i + 1 < 24; ++i)
    fs.push_back(alg.make({VarId{i}, VarId{i + 1}}, {0, 0, 0, 0}));
  EXPECT_THROW(brute_optimum(alg, std::span(fs)), EnumerationLimit);
}

TEST(Oracle, ProjectionTransitivity) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_table_problem(rng, Semiring::max_times, {}, ValueModel::positive_reals);
    Domain all;
    for (const auto& f : p.factors) all = join(all, f.scope());
    const Domain y = random_scope(all, 0, all.size(), rng);
    const Domain x = random_scope(y, 0, y.size(), rng);
    const auto direct = brute_marginal(p.algebra, std::span(p.factors), x);
    const auto twice = p.algebra.project(brute_marginal(p.algebra, std::span(p.factors), y), x);
    EXPECT_TRUE(p.algebra.equal(direct, twice, 1e-9));
  }
}

TEST(Counterexample, Sets) {
  const auto r = reproduce_counterexample();
  EXPECT_EQ(r.phi_bottom, 1);
  const Domain xy{VarId{0}, VarId{1}};
  EXPECT_EQ(r.lhs, (std::vector<Configuration>{cfg(xy, {0, 0}), cfg(xy, {1, 1})}));
  EXPECT_EQ(r.solutions, r.lhs);
  EXPECT_EQ(r.solutions_y, (std::vector<Configuration>{cfg({VarId{1}}, {0}), cfg({VarId{1}}, {1})}));
  EXPECT_EQ(r.w_x, (std::vector<Configuration>{cfg({VarId{0}}, {0}), cfg({VarId{0}}, {1})}));
  EXPECT_EQ(r.rhs, (std::vector<Configuration>{cfg(xy, {0, 0}), cfg(xy, {0, 1}), cfg(xy, {1, 0}),
                                                cfg(xy, {1, 1})}));
  EXPECT_TRUE(r.refuted);
  EXPECT_NE(r.lhs, r.rhs);
}

TEST(Counterexample, ReportIsStable) {
  const std::string a = format(reproduce_counterexample());
  const std::string b = format(reproduce_counterexample());
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("REFUTED"), std::string::npos);
}

TEST(Counterexample, DecompositionHoldsWhenXCoversY) {
  // With Y inside X both sides coincide on this function.
  EqualityFixture fx;
  const auto sides = decomposition_sides(fx.alg, fx.phi, {U, V}, {V});
  EXPECT_EQ(sides.lhs, sides.rhs);
}
