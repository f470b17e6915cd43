#include "vba/join_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vba/errors.hpp"

namespace vba {

namespace {

std::vector<std::vector<NodeId>> adjacency(const LabeledTree& tree) {
  const std::size_t n = tree.labels.size();
  std::vector<std::vector<NodeId>> adj(n);
  for (auto [a, b] : tree.edges) {
    if (a >= n || b >= n) throw StructureError("edge refers to a missing node");
    if (a == b) throw StructureError("self loop at node " + std::to_string(a));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (n == 0) throw StructureError("a tree needs at least one node");
  if (tree.edges.size() != n - 1)
    throw StructureError("a tree over " + std::to_string(n) + " nodes needs " +
                         std::to_string(n - 1) + " edges, got " +
                         std::to_string(tree.edges.size()));
  // n-1 edges plus connectivity rules out cycles.
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId i = stack.back();
    stack.pop_back();
    for (NodeId j : adj[i])
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
  }
  if (reached != n) throw StructureError("labeled tree is disconnected");
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

RunningIntersection verify_running_intersection(const LabeledTree& tree) {
  const auto adj = adjacency(tree);
  const std::size_t n = tree.labels.size();
  for (NodeId i = 0; i < n; ++i) {
    // BFS parents from i give the unique path to every j.
    std::vector<std::optional<NodeId>> via(n);
    std::vector<bool> seen(n, false);
    std::vector<NodeId> queue{i};
    seen[i] = true;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (NodeId k : adj[queue[q]])
        if (!seen[k]) {
          seen[k] = true;
          via[k] = queue[q];
          queue.push_back(k);
        }
    for (NodeId j = i + 1; j < n; ++j) {
      const Domain shared = meet(tree.labels[i], tree.labels[j]);
      for (NodeId k = *via[j]; k != i; k = *via[k])
        if (!tree.labels[k].includes(shared)) return {false, std::array{i, j, k}};
    }
  }
  return {true, std::nullopt};
}

CoveringJoinTree::CoveringJoinTree(std::vector<Domain> labels,
                                   std::vector<std::optional<NodeId>> parents,
                                   std::vector<Domain> factor_labels,
                                   std::vector<NodeId> assignment)
    : labels_(std::move(labels)),
      parents_(std::move(parents)),
      factor_labels_(std::move(factor_labels)),
      assignment_(std::move(assignment)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw StructureError("a join tree needs at least one node");
  if (parents_.size() != n) throw StructureError("one parent entry per node required");
  if (factor_labels_.size() != assignment_.size())
    throw ConfigError("one node assignment per factor required");
  std::size_t roots = 0;
  children_.assign(n, {});
  for (NodeId i = 0; i < n; ++i) {
    if (!parents_[i]) {
      ++roots;
      root_ = i;
      continue;
    }
    if (*parents_[i] >= n || *parents_[i] == i)
      throw StructureError("node " + std::to_string(i) + " has an invalid parent");
    children_[*parents_[i]].push_back(i);
  }
  if (roots != 1)
    throw StructureError("a rooted tree needs exactly one root, got " + std::to_string(roots));
  // Every node must reach the root without revisiting a node.
  for (NodeId i = 0; i < n; ++i) {
    std::size_t steps = 0;
    for (NodeId k = i; parents_[k]; k = *parents_[k])
      if (++steps > n) throw StructureError("parent links contain a cycle");
  }
  factors_at_.assign(n, {});
  for (std::size_t f = 0; f < assignment_.size(); ++f) {
    if (assignment_[f] >= n)
      throw StructureError("factor " + std::to_string(f) + " assigned to a missing node");
    factors_at_[assignment_[f]].push_back(f);
  }
}

Domain CoveringJoinTree::separator(NodeId i) const {
  const auto p = parent(i);
  return p ? meet(labels_[i], labels_[*p]) : Domain{};
}

std::vector<NodeId> CoveringJoinTree::pre_order() const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId i = stack.back();
    stack.pop_back();
    out.push_back(i);
    for (auto it = children_[i].rbegin(); it != children_[i].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> CoveringJoinTree::post_order() const {
  std::vector<NodeId> out;
  // (node, next child index)
  std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < children_[node].size()) {
      const NodeId child = children_[node][next++];
      stack.emplace_back(child, 0);
    } else {
      out.push_back(node);
      stack.pop_back();
    }
  }
  return out;
}

std::vector<NodeId> CoveringJoinTree::subtree(NodeId i) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{i};
  while (!stack.empty()) {
    const NodeId k = stack.back();
    stack.pop_back();
    out.push_back(k);
    for (NodeId c : children_.at(k)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CoveringJoinTree::covers() const {
  for (std::size_t f = 0; f < factor_labels_.size(); ++f)
    if (!labels_[assignment_[f]].includes(factor_labels_[f])) return false;
  return true;
}

LabeledTree CoveringJoinTree::undirected() const {
  LabeledTree t{labels_, {}};
  for (NodeId i = 0; i < size(); ++i)
    if (parents_[i]) t.edges.emplace_back(*parents_[i], i);
  return t;
}

std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::min_degree: return "min-degree";
    case Heuristic::min_fill: return "min-fill";
    case Heuristic::given: return "given";
  }
  return "?";
}

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  for (Heuristic h : {Heuristic::min_degree, Heuristic::min_fill, Heuristic::given})
    if (to_string(h) == name) return h;
  return std::nullopt;
}

namespace {

Domain union_of(std::span<const Domain> scopes) {
  Domain all;
  for (const auto& s : scopes) all = join(all, s);
  return all;
}

}  // namespace

std::vector<VarId> elimination_order(std::span<const Domain> scopes, const TreeOptions& options) {
  const Domain all = union_of(scopes);
  if (options.heuristic == Heuristic::given) {
    std::vector<VarId> order;
    std::set<VarId> listed;
    for (VarId v : options.order) {
      if (!listed.insert(v).second)
        throw ConfigError("elimination order lists v" + std::to_string(index_of(v)) + " twice");
      if (all.contains(v)) order.push_back(v);
    }
    const Domain missing = difference(all, Domain(std::vector<VarId>(listed.begin(), listed.end())));
    if (!missing.empty())
      throw ConfigError("elimination order misses variables " + to_string(missing));
    return order;
  }

  std::map<VarId, std::set<VarId>> graph;
  for (VarId v : all) graph[v];
  for (const auto& s : scopes)
    for (VarId a : s)
      for (VarId b : s)
        if (a != b) graph[a].insert(b);

  auto fill_in = [&](VarId v) {
    const auto& nb = graph[v];
    std::size_t missing = 0;
    for (auto a = nb.begin(); a != nb.end(); ++a)
      for (auto b = std::next(a); b != nb.end(); ++b)
        if (!graph[*a].contains(*b)) ++missing;
    return missing;
  };

  std::vector<VarId> order;
  while (!graph.empty()) {
    VarId best = graph.begin()->first;
    std::size_t best_cost = static_cast<std::size_t>(-1);
    // std::map iterates in canonical order, so the first minimum wins ties.
    for (const auto& [v, nb] : graph) {
      const std::size_t cost =
          options.heuristic == Heuristic::min_degree ? nb.size() : fill_in(v);
      if (cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    const std::set<VarId> nb = graph[best];
    for (VarId a : nb) {
      graph[a].erase(best);
      for (VarId b : nb)
        if (a != b) graph[a].insert(b);
    }
    graph.erase(best);
    order.push_back(best);
  }
  return order;
}

namespace {

struct Draft {
  std::vector<Domain> labels;
  std::vector<std::optional<NodeId>> parents;
  std::vector<bool> has_factor;
  std::vector<NodeId> assignment;
};

// Removes factor-less nodes whose label is included in a neighbour's label,
// then renumbers the survivors in their original order.
void absorb_redundant(Draft& d) {
  const std::size_t n = d.labels.size();
  std::vector<bool> alive(n, true);
  auto children_of = [&](NodeId i) {
    std::vector<NodeId> out;
    for (NodeId k = 0; k < n; ++k)
      if (alive[k] && d.parents[k] == i) out.push_back(k);
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId i = 0; i < n && !changed; ++i) {
      if (!alive[i] || d.has_factor[i]) continue;
      const auto kids = children_of(i);
      if (d.parents[i] && d.labels[*d.parents[i]].includes(d.labels[i])) {
        for (NodeId c : kids) d.parents[c] = d.parents[i];
        alive[i] = false;
        changed = true;
      } else if (!d.parents[i]) {
        for (NodeId c : kids) {
          if (!d.labels[c].includes(d.labels[i])) continue;
          d.parents[c] = std::nullopt;
          for (NodeId other : kids)
            if (other != c) d.parents[other] = c;
          alive[i] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<NodeId> renumber(n, 0);
  Draft out;
  for (NodeId i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    renumber[i] = out.labels.size();
    out.labels.push_back(d.labels[i]);
    out.has_factor.push_back(d.has_factor[i]);
  }
  for (NodeId i = 0; i < n; ++i)
    if (alive[i])
      out.parents.push_back(d.parents[i] ? std::optional<NodeId>(renumber[*d.parents[i]])
                                         : std::nullopt);
  for (NodeId a : d.assignment) out.assignment.push_back(renumber[a]);
  d = std::move(out);
}

}  // namespace

CoveringJoinTree build_covering_join_tree(std::span<const Domain> factor_labels,
                                          const TreeOptions& options,
                                          std::span<const Domain> required) {
  if (factor_labels.empty()) throw ConfigError("cannot build a join tree without factors");
  std::vector<Domain> scopes(factor_labels.begin(), factor_labels.end());
  scopes.insert(scopes.end(), required.begin(), required.end());
  const std::vector<VarId> order = elimination_order(scopes, options);

  std::vector<Domain> factor_copy(factor_labels.begin(), factor_labels.end());
  if (order.empty()) {
    std::vector<NodeId> assignment(factor_copy.size(), 0);
    return CoveringJoinTree({Domain{}}, {std::nullopt}, std::move(factor_copy),
                            std::move(assignment));
  }

  std::map<VarId, NodeId> bucket_of;
  for (NodeId b = 0; b < order.size(); ++b) bucket_of[order[b]] = b;
  const NodeId last = order.size() - 1;
  auto first_bucket = [&](const Domain& s) {
    NodeId best = last;
    for (VarId v : s) best = std::min(best, bucket_of.at(v));
    return best;
  };

  Draft d;
  d.labels.assign(order.size(), Domain{});
  d.parents.assign(order.size(), std::nullopt);
  d.has_factor.assign(order.size(), false);
  for (const auto& s : factor_labels) {
    const NodeId b = first_bucket(s);
    d.assignment.push_back(b);
    d.labels[b] = join(d.labels[b], s);
    d.has_factor[b] = true;
  }
  for (const auto& s : required) {
    const NodeId b = first_bucket(s);
    d.labels[b] = join(d.labels[b], s);
  }
  for (NodeId b = 0; b < order.size(); ++b) {
    d.labels[b] = join(d.labels[b], Domain{order[b]});
    if (b == last) break;
    const Domain message = difference(d.labels[b], Domain{order[b]});
    const NodeId target = message.empty() ? last : first_bucket(message);
    d.parents[b] = target;
    d.labels[target] = join(d.labels[target], message);
  }
  absorb_redundant(d);
  CoveringJoinTree tree(std::move(d.labels), std::move(d.parents), std::move(factor_copy),
                        std::move(d.assignment));
  return required.empty() ? tighten(tree) : tree;
}

CoveringJoinTree tighten(const CoveringJoinTree& tree) {
  std::vector<Domain> reach(tree.size());
  for (NodeId i : tree.post_order()) {
    for (std::size_t f : tree.factors_at(i)) reach[i] = join(reach[i], tree.factor_labels()[f]);
    for (NodeId c : tree.children(i)) reach[i] = join(reach[i], reach[c]);
  }
  std::vector<Domain> labels(tree.size());
  std::vector<std::optional<NodeId>> parents(tree.size());
  for (NodeId i = 0; i < tree.size(); ++i) {
    labels[i] = meet(tree.label(i), reach[i]);
    parents[i] = tree.parent(i);
  }
  return CoveringJoinTree(std::move(labels), std::move(parents), tree.factor_labels(),
                          tree.assignment());
}

CoveringJoinTree root_towards(const CoveringJoinTree& tree, const Domain& query) {
  std::optional<NodeId> target;
  if (tree.label(tree.root()).includes(query)) {
    target = tree.root();
  } else {
    for (NodeId i = 0; i < tree.size() && !target; ++i)
      if (tree.label(i).includes(query)) target = i;
  }
  if (!target)
    throw QueryDomainError("no join tree node covers " + to_string(query) +
                           "; rebuild the tree with the query as a required clique");
  std::vector<std::optional<NodeId>> parents(tree.size());
  for (NodeId i = 0; i < tree.size(); ++i) parents[i] = tree.parent(i);
  // Reverse the parent links along the path from the new root upwards.
  std::optional<NodeId> previous;
  for (std::optional<NodeId> k = *target; k;) {
    const std::optional<NodeId> next = tree.parent(*k);
    parents[*k] = previous;
    previous = k;
    k = next;
  }
  return tighten(CoveringJoinTree(tree.labels(), std::move(parents), tree.factor_labels(),
                                  tree.assignment()));
}

}  // namespace vba
