#include "ncdtree/mutation.hpp"

#include <algorithm>

#include "ncdtree/errors.hpp"

namespace ncdtree {

ClusterTree random_tree(std::vector<std::string> labels, Rng& rng) {
  const auto n = static_cast<NodeId>(labels.size());
  if (n < 4) throw InvalidInput("a tree needs at least 4 leaves, got " + std::to_string(n));
  std::vector<Edge> edges{{0, n}, {1, n}, {2, n}};
  edges.reserve(2 * n - 3);
  for (NodeId leaf = 3; leaf < n; ++leaf) {
    const NodeId fresh = n + leaf - 2;
    auto& e = edges[rng.below(edges.size())];
    const NodeId far = e.second;
    e.second = fresh;
    edges.emplace_back(fresh, far);
    edges.emplace_back(fresh, leaf);
  }
  return ClusterTree::from_edges(std::move(labels), edges);
}

const char* to_string(MutationKind kind) noexcept {
  switch (kind) {
    case MutationKind::LeafSwap: return "leaf-swap";
    case MutationKind::SubtreeSwap: return "subtree-swap";
    case MutationKind::SubtreeTransfer: return "subtree-transfer";
  }
  return "?";
}

bool mutate_leaf_swap(ClusterTree& tree, Rng& rng) {
  const auto n = tree.leaf_count();
  auto a = static_cast<NodeId>(rng.below(n));
  auto b = static_cast<NodeId>(rng.below(n - 1));
  if (b >= a) ++b;
  tree.swap_leaf_labels(a, b);
  return true;
}

namespace {

constexpr int kSwapAttempts = 64;

std::size_t smallest_label_index(const ClusterTree& tree) {
  const auto& labels = tree.labels();
  return static_cast<std::size_t>(std::min_element(labels.begin(), labels.end()) - labels.begin());
}

bool is_ancestor(const std::vector<NodeId>& parent, NodeId maybe_ancestor, NodeId v) {
  for (NodeId p = parent[v]; p >= 0; p = parent[p])
    if (p == maybe_ancestor) return true;
  return false;
}

}  // namespace

bool mutate_subtree_swap(ClusterTree& tree, Rng& rng) {
  const auto n = static_cast<NodeId>(tree.leaf_count());
  const NodeId root = tree.neighbors(tree.leaf_of(smallest_label_index(tree)))[0];
  std::vector<NodeId> candidates;
  for (NodeId v = n; static_cast<std::size_t>(v) < tree.node_count(); ++v)
    if (v != root) candidates.push_back(v);
  if (candidates.size() < 2) return false;

  const auto parent = tree.parents(root);
  for (int attempt = 0; attempt < kSwapAttempts; ++attempt) {
    auto i = rng.below(candidates.size());
    auto j = rng.below(candidates.size() - 1);
    if (j >= i) ++j;
    const NodeId u = candidates[i], v = candidates[j];
    if (is_ancestor(parent, u, v) || is_ancestor(parent, v, u)) continue;
    const NodeId pu = parent[u], pv = parent[v];
    if (pu == pv) return true;  // siblings: same tree
    tree.replace_neighbor(pu, u, v);
    tree.replace_neighbor(pv, v, u);
    tree.replace_neighbor(u, pu, pv);
    tree.replace_neighbor(v, pv, pu);
    return true;
  }
  return false;
}

bool mutate_subtree_transfer(ClusterTree& tree, Rng& rng) {
  const auto n = tree.leaf_count();
  const auto pick = rng.below(3 * (n - 2));
  const auto p = static_cast<NodeId>(n + pick / 3);
  const NodeId u = tree.neighbors(p)[pick % 3];
  NodeId ab[2];
  std::size_t k = 0;
  for (NodeId w : tree.neighbors(p))
    if (w != u) ab[k++] = w;
  const NodeId a = ab[0], b = ab[1];

  tree.replace_neighbor(a, p, b);
  tree.replace_neighbor(b, p, a);

  // Edges of the remainder, found from a without entering p.
  std::vector<Edge> edges;
  std::vector<NodeId> stack{a};
  std::vector<NodeId> from(tree.node_count(), -2);
  from[a] = -1;
  from[p] = p;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : tree.neighbors(x)) {
      if (y == from[x] || y == p) continue;
      edges.emplace_back(x, y);
      from[y] = x;
      stack.push_back(y);
    }
  }
  const auto [x, y] = edges[rng.below(edges.size())];
  tree.replace_neighbor(x, y, p);
  tree.replace_neighbor(y, x, p);
  const NodeId nbrs[3] = {u, x, y};
  tree.set_neighbors(p, nbrs);
  return true;
}

bool apply_mutation(ClusterTree& tree, MutationKind kind, Rng& rng) {
  switch (kind) {
    case MutationKind::LeafSwap: return mutate_leaf_swap(tree, rng);
    case MutationKind::SubtreeSwap: return mutate_subtree_swap(tree, rng);
    case MutationKind::SubtreeTransfer: return mutate_subtree_transfer(tree, rng);
  }
  return false;
}

unsigned sample_burst_size(Rng& rng) {
  unsigned k = 1;
  while (k < kMaxBurst && rng.coin()) ++k;
  return k;
}

unsigned full_mutation(ClusterTree& tree, Rng& rng) {
  const unsigned k = sample_burst_size(rng);
  for (unsigned step = 0; step < k; ++step)
    apply_mutation(tree, static_cast<MutationKind>(rng.below(3)), rng);
  return k;
}

}  // namespace ncdtree
