#pragma once

#include <memory>
#include <vector>

#include "vba/config.hpp"
#include "vba/table.hpp"

namespace vba::test {

inline constexpr VarId U{0}, V{1}, W{2};

inline std::shared_ptr<const VariableSystem> binary_system(std::size_t n) {
  std::vector<std::size_t> sizes(n, 2);
  return std::make_shared<const VariableSystem>(VariableSystem::with_frame_sizes(sizes));
}

/// phi1 over {u} = (2,5) and phi2 over {u,v} = (1,4,0,3) in max-plus.
struct MaxPlusFixture {
  TableAlgebra alg{binary_system(2), Semiring::max_plus};
  std::vector<Table> factors{alg.make({U}, {2, 5}), alg.make({U, V}, {1, 4, 0, 3})};
};

/// phi(x,y) = [x = y] in the boolean algebra.
struct EqualityFixture {
  TableAlgebra alg{binary_system(2), Semiring::boolean};
  Table phi = alg.make({U, V}, {1, 0, 0, 1});
};

inline Configuration cfg(Domain scope, std::vector<Value> values) {
  return Configuration(std::move(scope), std::move(values));
}

}  // namespace vba::test
