#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "vba/algebra.hpp"
#include "vba/detail/odometer.hpp"
#include "vba/errors.hpp"
#include "vba/family.hpp"

namespace vba {

/// Largest state space the brute-force routines will enumerate.
inline constexpr std::size_t enumeration_limit = 10'000'000;

namespace detail {

template <SemiringAlgebra A>
Domain factor_domain(const A& alg, std::span<const typename A::Valuation> factors) {
  Domain all;
  for (const auto& f : factors) all = join(all, alg.label(f));
  return all;
}

/// Calls fn(z, score) for every z over `scope`, with the product score of
/// all factors at z.
template <SemiringAlgebra A, class Fn>
void enumerate_product(const A& alg, std::span<const typename A::Valuation> factors,
                       const Domain& scope, Fn&& fn) {
  const auto& sys = alg.system();
  if (sys.frame_count(scope) > enumeration_limit)
    throw EnumerationLimit("state space of " + to_string(scope) + " exceeds " +
                           std::to_string(enumeration_limit) + " configurations");
  const auto dims = sys.dims(scope);
  for_each_assignment(dims, [&](const std::vector<Value>& values) {
    const Configuration z(scope, values);
    double acc = alg.one();
    for (const auto& f : factors) acc = alg.multiply(acc, alg.score(f, restrict(z, alg.label(f))));
    fn(z, acc);
  });
}

}  // namespace detail

/// (f_1 x ... x f_n) projected to `query`, by enumerating every
/// configuration of the joint domain.
template <SemiringAlgebra A>
typename A::Valuation brute_marginal(const A& alg, std::span<const typename A::Valuation> factors,
                                     const Domain& query) {
  const Domain all = join(detail::factor_domain(alg, factors), query);
  const auto qdims = alg.system().dims(query);
  const auto qstrides = detail::strides_for(qdims);
  std::size_t cells = 1;
  for (std::size_t d : qdims) cells *= d;
  std::vector<double> scores(cells, -std::numeric_limits<double>::infinity());
  detail::enumerate_product(alg, factors, all, [&](const Configuration& z, double s) {
    std::size_t at = 0;
    for (std::size_t i = 0; i < query.size(); ++i) at += qstrides[i] * z.at(query.vars()[i]);
    scores[at] = std::max(scores[at], s);
  });
  return alg.from_scores(query, std::move(scores));
}

/// Optimal product score over all configurations of the joint domain.
template <SemiringAlgebra A>
double brute_optimum(const A& alg, std::span<const typename A::Valuation> factors) {
  double best = -std::numeric_limits<double>::infinity();
  detail::enumerate_product(alg, factors, detail::factor_domain(alg, factors),
                            [&](const Configuration&, double s) { best = std::max(best, s); });
  return best;
}

/// Every configuration of the joint domain attaining the optimum, sorted.
/// A negative tolerance means the algebra's default.
template <SemiringAlgebra A>
std::vector<Configuration> brute_solutions(const A& alg,
                                           std::span<const typename A::Valuation> factors,
                                           double tolerance = -1) {
  if (tolerance < 0) tolerance = alg.default_tolerance();
  const Domain all = detail::factor_domain(alg, factors);
  const double best = brute_optimum(alg, factors);
  std::vector<Configuration> out;
  detail::enumerate_product(alg, factors, all, [&](const Configuration& z, double s) {
    if (scores_equal(s, best, tolerance)) out.push_back(z);
  });
  return out;
}

/// Both sides of the claimed decomposition of solutions projected to X v Y:
///   lhs = { z_{XvY} : z in c_f }
///   rhs = { z over XvY : z_Y in c_f restricted to Y and
///                        z_{X-Y} in W_{f^X}(z_{X^Y}) }
struct DecompositionSides {
  std::vector<Configuration> solutions;    // c_f
  std::vector<Configuration> lhs;
  std::vector<Configuration> solutions_y;  // c_f restricted to Y
  std::vector<Configuration> rhs;
};

template <class A>
  requires SemiringAlgebra<A> && ExtensionFamily<A>
DecompositionSides decomposition_sides(const A& alg, const typename A::Valuation& f,
                                       const Domain& x, const Domain& y) {
  const auto& sys = alg.configurations();
  auto project_set = [&](const std::vector<Configuration>& set, const Domain& s) {
    std::vector<Configuration> out;
    for (const auto& z : set) out.push_back(sys.restrict(z, s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  DecompositionSides sides;
  sides.solutions = solution_set(alg, f);
  const Domain xy = join(x, y);
  sides.lhs = project_set(sides.solutions, xy);
  sides.solutions_y = project_set(sides.solutions, y);
  const auto f_x = alg.project(f, x);
  const Domain x_only = difference(x, y), shared = meet(x, y);
  for (const auto& z : sys.gamma(xy)) {
    if (!std::binary_search(sides.solutions_y.begin(), sides.solutions_y.end(),
                            sys.restrict(z, y)))
      continue;
    const auto w = w_set(alg, f_x, sys.restrict(z, shared));
    if (std::binary_search(w.begin(), w.end(), sys.restrict(z, x_only))) sides.rhs.push_back(z);
  }
  return sides;
}

/// The two-variable Boolean equality function evaluated on both sides of
/// the decomposition with X = {x}, Y = {y}.
struct CounterexampleReport {
  std::string function;                  // printable truth table of phi
  double phi_bottom = 0;                 // phi projected to the empty domain, at <>
  std::vector<Configuration> solutions;  // c_phi
  std::vector<Configuration> lhs;
  std::vector<Configuration> solutions_y;
  std::vector<Configuration> w_x;        // W_{phi^X}(<>)
  std::vector<Configuration> rhs;
  bool refuted = false;                  // lhs != rhs
};

CounterexampleReport reproduce_counterexample();

/// Plain-text rendering, stable across runs.
std::string format(const CounterexampleReport& report);

}  // namespace vba
