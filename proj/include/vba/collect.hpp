#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vba/algebra.hpp"
#include "vba/errors.hpp"
#include "vba/join_tree.hpp"

namespace vba {

/// Node contents before and after Collect, and the message each non-root
/// node sent to its parent.
template <class V>
struct CollectResult {
  std::vector<V> initial;                 // e combined with the assigned factors
  std::vector<V> collected;               // initial combined with child messages
  std::vector<std::optional<V>> message;  // message[j]: j -> parent(j), over separator(j)
};

/// Leaves-to-root message passing. Each node combines its factors with the
/// messages of its children (in ascending id order) and sends the result
/// projected to its separator. Afterwards collected[i] is the marginal of
/// the subtree product to label(i); at the root, the marginal of the whole
/// factorization.
///
/// The tree must cover the factors and be tight (see `tighten`); otherwise
/// ConfigError.
template <ValuationAlgebra A>
CollectResult<typename A::Valuation> collect(const A& alg, const CoveringJoinTree& tree,
                                             std::span<const typename A::Valuation> factors) {
  using V = typename A::Valuation;
  if (factors.size() != tree.assignment().size())
    throw ConfigError("join tree assigns " + std::to_string(tree.assignment().size()) +
                      " factors but " + std::to_string(factors.size()) + " were given");
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const Domain d = alg.label(factors[f]);
    if (d != tree.factor_labels()[f])
      throw ConfigError("factor " + std::to_string(f) + " has label " + to_string(d) +
                        " but the tree was built for " + to_string(tree.factor_labels()[f]));
    if (!tree.label(tree.assignment()[f]).includes(d))
      throw ConfigError("factor " + std::to_string(f) + " does not fit its node " +
                        std::to_string(tree.assignment()[f]));
  }

  CollectResult<V> result;
  result.initial.reserve(tree.size());
  for (NodeId i = 0; i < tree.size(); ++i) {
    V content = alg.identity();
    for (std::size_t f : tree.factors_at(i)) content = alg.combine(content, factors[f]);
    result.initial.push_back(std::move(content));
  }
  result.collected = result.initial;
  result.message.assign(tree.size(), std::nullopt);

  for (NodeId i : tree.post_order()) {
    V& content = result.collected[i];
    for (NodeId child : tree.children(i)) content = alg.combine(content, *result.message[child]);
    if (Domain(alg.label(content)) != tree.label(i))
      throw ConfigError("node " + std::to_string(i) + " collects " +
                        to_string(alg.label(content)) + " but is labeled " +
                        to_string(tree.label(i)) + "; tighten the tree first");
    if (tree.parent(i)) result.message[i] = alg.project(content, tree.separator(i));
  }
  return result;
}

/// Marginal of the factor product to `query`: the tree is built with
/// `query` as a required clique, rooted there, and the root content is
/// projected to `query`.
template <ValuationAlgebra A>
typename A::Valuation query_marginal(const A& alg,
                                     std::span<const typename A::Valuation> factors,
                                     const Domain& query, const TreeOptions& options = {}) {
  Domain all;
  for (const auto& f : factors) all = join(all, alg.label(f));
  if (!all.includes(query))
    throw DomainError("query " + to_string(query) + " mentions " +
                      to_string(difference(query, all)) + " outside every factor");
  const Domain required[] = {query};
  const CoveringJoinTree tree =
      root_towards(build_covering_join_tree(alg, factors, options, required), query);
  const auto result = collect(alg, tree, factors);
  return alg.project(result.collected[tree.root()], query);
}

}  // namespace vba
