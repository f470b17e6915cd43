#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vba/algebra.hpp"
#include "vba/domain.hpp"

namespace vba {

using NodeId = std::size_t;

/// Undirected tree with a domain label per node.
struct LabeledTree {
  std::vector<Domain> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

struct RunningIntersection {
  bool holds = true;
  /// (i, j, k): k lies on the i-j path but misses part of labels(i) ^ labels(j).
  std::optional<std::array<NodeId, 3>> witness;
};

/// Checks every pair of nodes. StructureError if the edges do not form a
/// tree over all nodes.
RunningIntersection verify_running_intersection(const LabeledTree& tree);

/// Rooted join tree with an assignment of factors (given by their labels)
/// to nodes. The constructor validates the rooted structure only; covering
/// and running intersection are checked separately.
class CoveringJoinTree {
 public:
  CoveringJoinTree(std::vector<Domain> labels, std::vector<std::optional<NodeId>> parents,
                   std::vector<Domain> factor_labels, std::vector<NodeId> assignment);

  std::size_t size() const noexcept { return labels_.size(); }
  NodeId root() const noexcept { return root_; }
  const Domain& label(NodeId i) const { return labels_.at(i); }
  const std::vector<Domain>& labels() const noexcept { return labels_; }
  std::optional<NodeId> parent(NodeId i) const { return parents_.at(i); }
  /// Children in ascending id order.
  const std::vector<NodeId>& children(NodeId i) const { return children_.at(i); }
  /// Empty at the root, label(i) ^ label(parent(i)) elsewhere.
  Domain separator(NodeId i) const;

  const std::vector<Domain>& factor_labels() const noexcept { return factor_labels_; }
  const std::vector<NodeId>& assignment() const noexcept { return assignment_; }
  /// Factor indices assigned to node i, ascending.
  const std::vector<std::size_t>& factors_at(NodeId i) const { return factors_at_.at(i); }

  /// Children before parents; siblings in ascending id order.
  std::vector<NodeId> post_order() const;
  /// Parents before children; siblings in ascending id order.
  std::vector<NodeId> pre_order() const;
  /// Nodes of the subtree rooted at i.
  std::vector<NodeId> subtree(NodeId i) const;

  /// Every factor label fits inside the label of its node.
  bool covers() const;
  LabeledTree undirected() const;

 private:
  std::vector<Domain> labels_;
  std::vector<std::optional<NodeId>> parents_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<Domain> factor_labels_;
  std::vector<NodeId> assignment_;
  std::vector<std::vector<std::size_t>> factors_at_;
  NodeId root_ = 0;
};

enum class Heuristic { min_degree, min_fill, given };

std::string_view to_string(Heuristic h);
std::optional<Heuristic> parse_heuristic(std::string_view name);

struct TreeOptions {
  Heuristic heuristic = Heuristic::min_fill;
  /// Elimination order for Heuristic::given; must list every variable that
  /// appears in a factor. Variables outside the factors are ignored.
  std::vector<VarId> order;
};

/// Elimination order over the interaction graph of `scopes`. Ties are
/// broken by canonical variable order.
std::vector<VarId> elimination_order(std::span<const Domain> scopes, const TreeOptions& options);

/// Bucket-elimination join tree: one bucket per eliminated variable, each
/// connected to the bucket that receives its projected message; buckets with
/// no factor whose label is contained in a neighbour's are absorbed.
/// `required` lists extra domains that must each fit inside some node label.
/// Without `required` the result is tight: each label equals
/// label(i) ^ (variables of the factors in the subtree of i). Tightening
/// would strip required domains, so with them the tree is left as built and
/// `root_towards` does the tightening.
CoveringJoinTree build_covering_join_tree(std::span<const Domain> factor_labels,
                                          const TreeOptions& options,
                                          std::span<const Domain> required = {});

template <ValuationAlgebraCore A>
CoveringJoinTree build_covering_join_tree(const A& alg,
                                          std::span<const typename A::Valuation> factors,
                                          const TreeOptions& options,
                                          std::span<const Domain> required = {}) {
  std::vector<Domain> labels;
  labels.reserve(factors.size());
  for (const auto& f : factors) labels.emplace_back(alg.label(f));
  return build_covering_join_tree(labels, options, required);
}

/// Shrinks every label to label(i) ^ (union of factor labels in the subtree
/// of i). Preserves covering and running intersection; the root label only
/// loses variables that no factor mentions.
CoveringJoinTree tighten(const CoveringJoinTree& tree);

/// Same undirected tree rooted at a node whose label includes `query`,
/// keeping the current root when it qualifies, then tightened.
/// QueryDomainError if no node covers `query`.
CoveringJoinTree root_towards(const CoveringJoinTree& tree, const Domain& query);

}  // namespace vba
