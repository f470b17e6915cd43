#include <gtest/gtest.h>

#include "support.hpp"
#include "vba/family.hpp"
#include "vba/sampling.hpp"
#include "vba/sparse.hpp"
#include "vba/suites.hpp"

using namespace vba;
using namespace vba::test;

TEST(Family, MaxPlusTables) {
  TableAlgebra alg(binary_system(4), Semiring::max_plus);
  Rng rng(1);
  const auto r = check_family(alg, table_sampler(alg, 4), 200, rng);
  EXPECT_TRUE(r.passed()) << r.witness.value_or("");
  EXPECT_EQ(r.trials, 200u);
}

TEST(Family, BooleanTables) {
  TableAlgebra alg(binary_system(4), Semiring::boolean);
  Rng rng(2);
  EXPECT_TRUE(check_family(alg, table_sampler(alg, 4), 200, rng).passed());
}

TEST(Family, SparsePotentials) {
  SparseAlgebra alg(binary_system(3));
  Rng rng(3);
  EXPECT_TRUE(check_family(alg, sparse_sampler(alg, 3), 100, rng).passed());
}

TEST(Family, CounterexampleTwoStep) {
  EqualityFixture fx;
  PropertyReport r{.property = "x = y"};
  check_family_on(fx.alg, fx.phi, r);
  EXPECT_TRUE(r.passed()) << r.witness.value_or("");
  // Two-step via t = {x}: every x attains 1, then y must equal x.
  const auto first = fx.alg.extension_set(fx.alg.project(fx.phi, {U}), Configuration{});
  EXPECT_EQ(first, (std::vector<Configuration>{cfg({U}, {0}), cfg({U}, {1})}));
  std::vector<Configuration> two_step;
  for (const auto& y : first)
    for (const auto& z : fx.alg.extension_set(fx.phi, y)) two_step.push_back(z);
  EXPECT_EQ(two_step, fx.alg.extension_set(fx.phi, Configuration{}));
}

TEST(Family, WSetsDropTheGivenScope) {
  EqualityFixture fx;
  EXPECT_EQ(w_set(fx.alg, fx.phi, cfg({U}, {1})), (std::vector<Configuration>{cfg({V}, {1})}));
  EXPECT_EQ(w_set(fx.alg, fx.alg.project(fx.phi, {U}), Configuration{}),
            (std::vector<Configuration>{cfg({U}, {0}), cfg({U}, {1})}));
}

TEST(Family, SolutionSet) {
  MaxPlusFixture fx;
  const Table f = fx.alg.make({U, V}, {3, 8, 5, 8});
  EXPECT_EQ(solution_set(fx.alg, f),
            (std::vector<Configuration>{cfg({U, V}, {0, 1}), cfg({U, V}, {1, 1})}));
}

TEST(Family, SuitesPassEveryInstance) {
  for (Instance i : all_instances()) {
    Rng rng(5);
    const auto r = family_suite(i, 50, rng);
    EXPECT_TRUE(r.passed()) << to_string(i) << ": " << r.witness.value_or("");
  }
}
