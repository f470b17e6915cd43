#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "vba/errors.hpp"

using namespace vba;
using namespace vba::test;

TEST(Table, MaxPlusCombine) {
  MaxPlusFixture fx;
  const Table f = fx.alg.combine(fx.factors[0], fx.factors[1]);
  EXPECT_EQ(f.scope(), (Domain{U, V}));
  EXPECT_EQ(fx.alg.values(f), (std::vector<double>{3, 6, 5, 8}));
}

TEST(Table, MaxPlusProject) {
  MaxPlusFixture fx;
  const Table f = fx.alg.make({U, V}, {3, 6, 5, 8});
  EXPECT_EQ(fx.alg.values(fx.alg.project(f, {U})), (std::vector<double>{6, 8}));
  EXPECT_EQ(fx.alg.values(fx.alg.project(f, {V})), (std::vector<double>{5, 8}));
  EXPECT_TRUE(fx.alg.equal(fx.alg.project(f, {U, V}), f, 0));
}

TEST(Table, ProjectOutsideLabelNamesVariables) {
  MaxPlusFixture fx;
  try {
    fx.alg.project(fx.factors[0], {V});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("v1"), std::string::npos) << e.what();
  }
}

TEST(Table, BooleanCombineIsConjunction) {
  TableAlgebra alg(binary_system(1), Semiring::boolean);
  const Table phi = alg.make({U}, {1, 0});
  const Table psi = alg.make({U}, {1, 1});
  EXPECT_EQ(alg.values(alg.combine(phi, psi)), (std::vector<double>{1, 0}));
  EXPECT_THROW(alg.make({U}, {2, 0}), Error);
}

TEST(Table, BooleanEqualityFunction) {
  EqualityFixture fx;
  EXPECT_EQ(fx.alg.evaluate(fx.phi, cfg({U, V}, {0, 0})), 1);
  EXPECT_EQ(fx.alg.evaluate(fx.phi, cfg({U, V}, {0, 1})), 0);
  EXPECT_EQ(fx.alg.evaluate(fx.alg.project(fx.phi, {}), Configuration{}), 1);
}

TEST(Table, IdentityIsNeutral) {
  MaxPlusFixture fx;
  const Table e = fx.alg.identity();
  EXPECT_TRUE(e.scope().empty());
  EXPECT_TRUE(fx.alg.equal(fx.alg.combine(fx.factors[1], e), fx.factors[1], 0));
}

TEST(Table, MixedAlgebrasAreRejected) {
  MaxPlusFixture fx;
  TableAlgebra other(fx.alg.shared_system(), Semiring::max_times);
  const Table g = other.make({U}, {1, 1});
  EXPECT_THROW(fx.alg.combine(fx.factors[0], g), InstanceMismatch);
  TableAlgebra foreign(binary_system(2), Semiring::max_plus);
  EXPECT_THROW(fx.alg.combine(fx.factors[0], foreign.make({U}, {0, 0})), InstanceMismatch);
}

TEST(Table, OrderedLayoutIsPermuted) {
  MaxPlusFixture fx;
  // Listed as (v, u): rows are v.
  const VarId order[] = {V, U};
  const double listed[] = {1, 0, 4, 3};
  const Table f = fx.alg.make_ordered(order, listed);
  EXPECT_TRUE(fx.alg.equal(f, fx.factors[1], 0));
  const double short_values[] = {1, 0, 4};
  EXPECT_THROW(fx.alg.make_ordered(order, short_values), DomainError);
}

TEST(Table, MinPlusIsNegatedInternally) {
  TableAlgebra alg(binary_system(2), Semiring::min_plus);
  const Table f = alg.make({U}, {3, 1});
  const Table g = alg.make({U, V}, {0, 2, 5, 4});
  const Table h = alg.combine(f, g);
  EXPECT_EQ(alg.values(h), (std::vector<double>{3, 5, 6, 5}));
  EXPECT_EQ(alg.values(alg.project(h, {U})), (std::vector<double>{3, 5}));
  EXPECT_EQ(alg.score(f, cfg({U}, {0})), -3);
  EXPECT_EQ(alg.evaluate(f, cfg({U}, {0})), 3);
  EXPECT_EQ(alg.to_user(alg.zero()), std::numeric_limits<double>::infinity());
  EXPECT_EQ(alg.extension_set(h, Configuration{}),
            (std::vector<Configuration>{cfg({U, V}, {0, 0})}));
}

TEST(Table, MaxTimes) {
  TableAlgebra alg(binary_system(2), Semiring::max_times);
  const Table f = alg.make({U}, {0.5, 2});
  const Table g = alg.make({U, V}, {1, 3, 0, 0.25});
  EXPECT_EQ(alg.values(alg.combine(f, g)), (std::vector<double>{0.5, 1.5, 0, 0.5}));
  EXPECT_THROW(alg.make({U}, {-1, 0}), Error);
  EXPECT_EQ(alg.default_tolerance(), 1e-9);
  const Table a = alg.make({U}, {0.1 + 0.2, 1});
  const Table b = alg.make({U}, {0.3, 1});
  EXPECT_FALSE(alg.equal(a, b, 0));
  EXPECT_TRUE(alg.equal(a, b, 1e-9));
}

TEST(Table, ExtensionSets) {
  MaxPlusFixture fx;
  const Table f = fx.alg.make({U, V}, {3, 6, 5, 8});
  EXPECT_EQ(fx.alg.extension_set(f, cfg({U}, {0})),
            (std::vector<Configuration>{cfg({U, V}, {0, 1})}));
  EXPECT_EQ(fx.alg.extension_set(f, Configuration{}),
            (std::vector<Configuration>{cfg({U, V}, {1, 1})}));
  EXPECT_EQ(fx.alg.extension_set(f, cfg({U, V}, {0, 0})),
            (std::vector<Configuration>{cfg({U, V}, {0, 0})}));
  EXPECT_EQ(fx.alg.first_extension(f, cfg({U}, {0})), cfg({U, V}, {0, 1}));
  EXPECT_THROW(fx.alg.extension_set(fx.factors[0], cfg({V}, {0})), DomainError);
}

TEST(Table, CounterexampleSolutions) {
  EqualityFixture fx;
  EXPECT_EQ(fx.alg.extension_set(fx.phi, Configuration{}),
            (std::vector<Configuration>{cfg({U, V}, {0, 0}), cfg({U, V}, {1, 1})}));
}

TEST(Table, SemiringNames) {
  for (Semiring s : {Semiring::boolean, Semiring::max_plus, Semiring::min_plus, Semiring::max_times})
    EXPECT_EQ(parse_semiring(to_string(s)), s);
  EXPECT_FALSE(parse_semiring("sum-product"));
}

TEST(Table, DescribeIsReadable) {
  MaxPlusFixture fx;
  const std::string text = fx.alg.describe(fx.factors[1]);
  EXPECT_NE(text.find("max-plus"), std::string::npos) << text;
  EXPECT_NE(text.find("[1, 4, 0, 3]"), std::string::npos) << text;
}
