#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vba/algebra.hpp"
#include "vba/report.hpp"

namespace vba {

/// Solution concept of a semiring algebra: the configurations over
/// label(f) with maximal score, by direct enumeration of the frame.
template <class A>
  requires SemiringAlgebra<A> && ExtensionFamily<A>
std::vector<Configuration> solution_set(const A& alg, const typename A::Valuation& f) {
  const auto all = alg.configurations().gamma(alg.label(f));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : all) best = std::max(best, alg.score(f, z));
  std::vector<Configuration> out;
  for (const auto& z : all)
    if (alg.score(f, z) == best) out.push_back(z);
  return out;
}

/// Variable-system form of the extension set: the values over
/// label(f) - scope(x) completing x optimally.
template <ExtensionFamily A>
std::vector<Configuration> w_set(const A& alg, const typename A::Valuation& f,
                                 const Configuration& x) {
  const Domain rest = difference(alg.label(f), x.scope());
  std::vector<Configuration> out;
  for (const auto& z : alg.extension_set(f, x)) out.push_back(alg.configurations().restrict(z, rest));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Checks the three family conditions on one valuation f, exhaustively:
///   full scope : E_f(x) = {x} for every x over label(f)
///   two step   : for s < t <= label(f) and x over s,
///                E_f(x) = { y : y_t in E_{f^t}(x) and y in E_f(y_t) }
///   solutions  : the solution concept equals E_f(<>)
template <class A>
  requires SemiringAlgebra<A> && ExtensionFamily<A>
void check_family_on(const A& alg, const typename A::Valuation& f, PropertyReport& report) {
  const auto& sys = alg.configurations();
  const Domain d = alg.label(f);
  const auto full = sys.gamma(d);
  for (const auto& x : full) {
    const auto e = alg.extension_set(f, x);
    report.check(e.size() == 1 && e.front() == x, [&] {
      return "full scope: E(" + to_string(x) + ") = " + to_string(e) + " for " +
             std::string(alg.describe(f));
    });
  }
  for (const Domain& t : subsets(d)) {
    const auto f_t = alg.project(f, t);
    for (const Domain& s : subsets(t)) {
      if (s == t) continue;
      for (const auto& x : sys.gamma(s)) {
        const auto direct = alg.extension_set(f, x);
        const auto first = alg.extension_set(f_t, x);
        std::vector<Configuration> two_step;
        for (const auto& y : full) {
          const Configuration y_t = sys.restrict(y, t);
          if (!std::binary_search(first.begin(), first.end(), y_t)) continue;
          const auto second = alg.extension_set(f, y_t);
          if (std::binary_search(second.begin(), second.end(), y)) two_step.push_back(y);
        }
        report.check(direct == two_step, [&] {
          return "two step: s=" + to_string(s) + " t=" + to_string(t) + " x=" + to_string(x) +
                 " direct " + to_string(direct) + " vs " + to_string(two_step) + " for " +
                 std::string(alg.describe(f));
        });
      }
    }
  }
  const auto c = solution_set(alg, f);
  const auto e = alg.extension_set(f, Configuration{});
  report.check(c == e, [&] {
    return "solutions: c = " + to_string(c) + " but E(<>) = " + to_string(e) + " for " +
           std::string(alg.describe(f));
  });
}

template <class A>
  requires SemiringAlgebra<A> && ExtensionFamily<A>
PropertyReport check_family(const A& alg,
                            const std::function<typename A::Valuation(Rng&)>& sampler,
                            std::size_t trials, Rng& rng) {
  PropertyReport report{.property = "extension family conditions"};
  for (std::size_t i = 0; i < trials; ++i) {
    ++report.trials;
    check_family_on(alg, sampler(rng), report);
  }
  return report;
}

}  // namespace vba
