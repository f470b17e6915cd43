#pragma once

#include <vector>

namespace vba {

/// A problem instance: one concrete algebra and the factors of the
/// valuation to marginalize or solve.
template <class A>
struct Factorization {
  A algebra;
  std::vector<typename A::Valuation> factors;
};

}  // namespace vba
