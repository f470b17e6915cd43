#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vba/algebra.hpp"
#include "vba/collect.hpp"
#include "vba/errors.hpp"
#include "vba/join_tree.hpp"
#include "vba/report.hpp"

namespace vba {

/// How a node chooses among its extension set.
///   lexicographic : smallest configuration in canonical order
///   first_found   : first extension met by the instance's own enumeration,
///                   without materializing the set
enum class Picker { lexicographic, first_found };

std::string_view to_string(Picker p);
std::optional<Picker> parse_picker(std::string_view name);

struct ExtendResult {
  std::vector<Configuration> downward;  // per node, over separator(i); <> at the root
  std::vector<Configuration> local;     // per node, over label(i)
  Configuration solution;               // merger of all local configurations
};

/// Root-to-leaves pass after Collect: the root extends <>, every other node
/// extends the restriction of its parent's choice to its separator, and the
/// local choices are merged. NoSolution names the first node whose
/// extension set is empty.
template <ExtensionFamily A>
ExtendResult extend(const A& alg, const CoveringJoinTree& tree,
                    const CollectResult<typename A::Valuation>& collected,
                    Picker picker = Picker::lexicographic) {
  const auto& sys = alg.configurations();
  ExtendResult out;
  out.downward.assign(tree.size(), Configuration{});
  out.local.assign(tree.size(), Configuration{});
  for (NodeId i : tree.pre_order()) {
    if (const auto p = tree.parent(i)) out.downward[i] = sys.restrict(out.local[*p], tree.separator(i));
    std::optional<Configuration> chosen;
    if (picker == Picker::first_found) {
      chosen = alg.first_extension(collected.collected[i], out.downward[i]);
    } else {
      const auto set = alg.extension_set(collected.collected[i], out.downward[i]);
      if (!set.empty()) chosen = *std::min_element(set.begin(), set.end());
    }
    if (!chosen)
      throw NoSolution(i, "node " + std::to_string(i) + " cannot extend " +
                              to_string(out.downward[i]));
    out.local[i] = std::move(*chosen);
  }
  out.solution = sys.merge(out.local);
  return out;
}

/// Score of z under the factor product: the semiring product of every
/// factor evaluated at its restriction of z.
template <SemiringAlgebra A>
double product_score(const A& alg, std::span<const typename A::Valuation> factors,
                     const Configuration& z) {
  double acc = alg.one();
  for (const auto& f : factors) acc = alg.multiply(acc, alg.score(f, restrict(z, alg.label(f))));
  return acc;
}

struct SolveOptions {
  TreeOptions tree;
  Picker picker = Picker::lexicographic;
};

struct Solution {
  Configuration assignment;
  double score = 0;        // internal score of the assignment
  double objective = 0;    // the same in user units
  double marginal = 0;     // score of the root marginal projected to <>
  bool satisfiable = true; // false when the optimum is the semiring zero
};

/// Collect followed by Extend on a bucket-elimination join tree.
template <class A>
  requires ExtensionFamily<A> && SemiringAlgebra<A>
Solution solve(const A& alg, std::span<const typename A::Valuation> factors,
               const SolveOptions& options = {}) {
  const CoveringJoinTree tree = build_covering_join_tree(alg, factors, options.tree);
  const auto collected = collect(alg, tree, factors);
  const auto extended = extend(alg, tree, collected, options.picker);
  Solution s;
  s.assignment = extended.solution;
  s.score = product_score(alg, factors, s.assignment);
  s.objective = alg.to_user(s.score);
  s.marginal = alg.score(alg.project(collected.collected[tree.root()], Domain{}), Configuration{});
  s.satisfiable = s.score != alg.zero();
  return s;
}

inline constexpr std::size_t default_solution_cap = 1'000'000;

struct AllSolutions {
  std::vector<Configuration> solutions;  // sorted
  bool truncated = false;                // the cap cut the enumeration short
  std::size_t rejected = 0;              // candidates that failed verification
  double score = 0;
  double objective = 0;
};

/// Every solution: Extend with set-valued downward propagation. The root
/// enumerates its whole extension set of <>, and each node extends every
/// partial configuration received by every element of its extension set.
/// Candidates are verified against the optimum before being returned.
template <class A>
  requires ExtensionFamily<A> && SemiringAlgebra<A>
AllSolutions solve_all(const A& alg, std::span<const typename A::Valuation> factors,
                       const TreeOptions& tree_options = {},
                       std::size_t cap = default_solution_cap) {
  const auto& sys = alg.configurations();
  const CoveringJoinTree tree = build_covering_join_tree(alg, factors, tree_options);
  const auto collected = collect(alg, tree, factors);
  AllSolutions out;
  out.score = alg.score(alg.project(collected.collected[tree.root()], Domain{}), Configuration{});
  out.objective = alg.to_user(out.score);

  std::vector<Configuration> partial;
  for (auto& z : alg.extension_set(collected.collected[tree.root()], Configuration{})) {
    if (partial.size() == cap) {
      out.truncated = true;
      break;
    }
    partial.push_back(std::move(z));
  }
  for (NodeId i : tree.pre_order()) {
    if (i == tree.root()) continue;
    const Domain sep = tree.separator(i);
    std::map<Configuration, std::vector<Configuration>> cache;
    std::vector<Configuration> next;
    for (const auto& p : partial) {
      const Configuration nu = sys.restrict(p, sep);
      auto it = cache.find(nu);
      if (it == cache.end()) it = cache.emplace(nu, alg.extension_set(collected.collected[i], nu)).first;
      for (const auto& eta : it->second) {
        if (next.size() == cap) {
          out.truncated = true;
          break;
        }
        const Configuration pair[] = {p, eta};
        next.push_back(sys.merge(pair));
      }
      if (next.size() == cap && out.truncated) break;
    }
    partial = std::move(next);
  }
  const double tol = alg.default_tolerance();
  for (auto& z : partial) {
    if (scores_equal(product_score(alg, factors, z), out.score, tol))
      out.solutions.push_back(std::move(z));
    else
      ++out.rejected;
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()), out.solutions.end());
  return out;
}

// ---------------------------------------------------------------------------
// Extensibility checks.

template <class V>
using ScopedSampler = std::function<V(const Domain&, Rng&)>;

/// Whether z (over label(f)) extends the part of x that f sees.
template <ExtensionFamily A>
bool is_extension(const A& alg, const typename A::Valuation& f, const Configuration& x,
                  const Configuration& z) {
  const Domain d = alg.label(f);
  if (z.scope() != d) return false;
  const auto set = alg.extension_set(f, alg.configurations().restrict(x, meet(x.scope(), d)));
  return std::binary_search(set.begin(), set.end(), z);
}

namespace detail {

// Groups the configurations of `all` by their restriction to `t`.
inline std::map<Configuration, std::vector<const Configuration*>> group_by(
    const ConfigurationSystem& sys, const std::vector<Configuration>& all, const Domain& t) {
  std::map<Configuration, std::vector<const Configuration*>> groups;
  for (const auto& z : all) groups[sys.restrict(z, t)].push_back(&z);
  return groups;
}

inline bool contains(const std::vector<Configuration>& sorted, const Configuration& z) {
  return std::binary_search(sorted.begin(), sorted.end(), z);
}

}  // namespace detail

/// Checks the two-factor extensibility implication for one pair over every
/// t with d1^d2 <= t <= d1vd2, every x over t and every z over d1vd2
/// extending x. With `both_directions` the converse is checked as well.
template <ExtensionFamily A>
void check_extensibility_pair(const A& alg, const typename A::Valuation& f1,
                              const typename A::Valuation& f2, bool both_directions,
                              PropertyReport& report) {
  const auto& sys = alg.configurations();
  const Domain d1 = alg.label(f1), d2 = alg.label(f2);
  const Domain top = join(d1, d2);
  const auto product = alg.combine(f1, f2);
  const auto all = sys.gamma(top);
  for (const Domain& t : interval(meet(d1, d2), top)) {
    for (const auto& [x, extending] : detail::group_by(sys, all, t)) {
      const auto e1 = alg.extension_set(f1, sys.restrict(x, meet(t, d1)));
      const auto e2 = alg.extension_set(f2, sys.restrict(x, meet(t, d2)));
      const auto e12 = alg.extension_set(product, x);
      for (const Configuration* z : extending) {
        const bool pieces = detail::contains(e1, sys.restrict(*z, d1)) &&
                            detail::contains(e2, sys.restrict(*z, d2));
        const bool joint = detail::contains(e12, *z);
        const bool holds = both_directions ? pieces == joint : (!pieces || joint);
        report.check(holds, [&] {
          return std::string(pieces ? "extension to both factors is not an extension to the product"
                                    : "extension to the product is not an extension to both factors") +
                 ": t=" + to_string(t) + " x=" + to_string(x) + " z=" + to_string(*z) +
                 " phi1=" + std::string(alg.describe(f1)) + " phi2=" + std::string(alg.describe(f2));
        });
      }
    }
  }
}

namespace detail {

template <ExtensionFamily A>
PropertyReport check_pairs(const A& alg, const ScopedSampler<typename A::Valuation>& sampler,
                           std::size_t max_scope, std::size_t trials, Rng& rng, bool full,
                           std::string name) {
  PropertyReport report{.property = std::move(name)};
  const Domain vars = alg.configurations().variables();
  for (std::size_t i = 0; i < trials; ++i) {
    ++report.trials;
    auto scope = [&] {
      std::vector<VarId> pool(vars.begin(), vars.end());
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(std::uniform_int_distribution<std::size_t>(0, std::min(max_scope, pool.size()))(rng));
      return Domain(std::move(pool));
    };
    const auto f1 = sampler(scope(), rng);
    const auto f2 = sampler(scope(), rng);
    check_extensibility_pair(alg, f1, f2, full, report);
  }
  return report;
}

}  // namespace detail

/// Piecewise extensibility on sampled pairs (scopes of up to `max_scope`
/// variables of the algebra's configuration system).
template <ExtensionFamily A>
PropertyReport check_piecewise_extensible(const A& alg,
                                          const ScopedSampler<typename A::Valuation>& sampler,
                                          std::size_t max_scope, std::size_t trials, Rng& rng) {
  return detail::check_pairs(alg, sampler, max_scope, trials, rng, false, "piecewise extensible");
}

template <ExtensionFamily A>
PropertyReport check_fully_piecewise_extensible(
    const A& alg, const ScopedSampler<typename A::Valuation>& sampler, std::size_t max_scope,
    std::size_t trials, Rng& rng) {
  return detail::check_pairs(alg, sampler, max_scope, trials, rng, true,
                             "fully piecewise extensible");
}

/// Direct checks of the m-factor lemmas on sampled factorizations:
///  * with r_i = d_i ^ (v_{j!=i} d_j) and v r_i <= t <= v d_i, an extension
///    of x over t to every factor is an extension of x to their product;
///  * with an extra factor rho whose label includes v r_i, merging a
///    solution of the product projected to d_rho with extensions of it to
///    every other factor yields a solution of the product.
template <ExtensionFamily A>
PropertyReport check_nary_lemmas(const A& alg, const ScopedSampler<typename A::Valuation>& sampler,
                                 std::size_t factors, std::size_t max_scope, std::size_t trials,
                                 Rng& rng, std::size_t combination_cap = 256) {
  using V = typename A::Valuation;
  const auto& sys = alg.configurations();
  const Domain vars = sys.variables();
  PropertyReport report{.property = "n-ary extension lemmas (m=" + std::to_string(factors) + ")"};
  auto random_scope = [&](std::size_t lo, std::size_t hi, const Domain& forced) {
    std::vector<VarId> pool(vars.begin(), vars.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::uniform_int_distribution<std::size_t>(lo, std::min(hi, pool.size()))(rng));
    return join(Domain(std::move(pool)), forced);
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++report.trials;
    std::vector<V> fs;
    std::vector<Domain> ds;
    for (std::size_t i = 0; i < factors; ++i) {
      fs.push_back(sampler(random_scope(0, max_scope, {}), rng));
      ds.emplace_back(alg.label(fs.back()));
    }
    Domain top, reach;
    for (std::size_t i = 0; i < factors; ++i) {
      Domain others;
      for (std::size_t j = 0; j < factors; ++j)
        if (j != i) others = join(others, ds[j]);
      top = join(top, ds[i]);
      reach = join(reach, meet(ds[i], others));
    }
    V product = fs.front();
    for (std::size_t i = 1; i < factors; ++i) product = alg.combine(product, fs[i]);
    const auto all = sys.gamma(top);

    for (const Domain& t : interval(reach, top)) {
      for (const auto& [x, extending] : detail::group_by(sys, all, t)) {
        std::vector<std::vector<Configuration>> sets;
        for (std::size_t i = 0; i < factors; ++i)
          sets.push_back(alg.extension_set(fs[i], sys.restrict(x, meet(t, ds[i]))));
        const auto joint = alg.extension_set(product, x);
        for (const Configuration* z : extending) {
          bool pieces = true;
          for (std::size_t i = 0; i < factors && pieces; ++i)
            pieces = detail::contains(sets[i], sys.restrict(*z, ds[i]));
          if (!pieces) continue;
          report.check(detail::contains(joint, *z), [&] {
            return "extension to every factor is not an extension to the product: t=" +
                   to_string(t) + " x=" + to_string(x) + " z=" + to_string(*z);
          });
        }
      }
    }

    // Solution lemma with an extra factor rho covering the r_i.
    const V rho = sampler(random_scope(0, max_scope, reach), rng);
    const Domain d_rho = alg.label(rho);
    const V whole = alg.combine(rho, product);
    const auto whole_solutions = alg.extension_set(whole, Configuration{});
    for (const auto& x : alg.extension_set(alg.project(whole, d_rho), Configuration{})) {
      std::vector<std::vector<Configuration>> sets;
      for (std::size_t i = 0; i < factors; ++i)
        sets.push_back(alg.extension_set(fs[i], sys.restrict(x, meet(d_rho, ds[i]))));
      if (std::any_of(sets.begin(), sets.end(), [](const auto& s) { return s.empty(); })) {
        report.record(false, "no extension of solution " + to_string(x) + " to some factor");
        continue;
      }
      std::vector<std::size_t> pick(factors, 0);
      for (std::size_t combos = 0; combos < combination_cap; ++combos) {
        std::vector<Configuration> parts{x};
        for (std::size_t i = 0; i < factors; ++i) parts.push_back(sets[i][pick[i]]);
        bool mergeable = true;
        for (std::size_t a = 0; a < parts.size() && mergeable; ++a)
          for (std::size_t b = a + 1; b < parts.size() && mergeable; ++b)
            mergeable = sys.compatible(parts[a], parts[b]);
        if (mergeable) {
          const Configuration z = sys.merge(parts);
          report.check(detail::contains(whole_solutions, z), [&] {
            return "merged partial solutions " + to_string(z) + " are not a solution (x=" +
                   to_string(x) + ")";
          });
        }
        std::size_t k = 0;
        while (k < factors && ++pick[k] == sets[k].size()) pick[k++] = 0;
        if (k == factors) break;
      }
    }
  }
  return report;
}

}  // namespace vba
