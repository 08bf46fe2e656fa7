#include "ncdtree/cluster_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ncdtree/document.hpp"
#include "ncdtree/errors.hpp"

namespace ncdtree {

ClusterTree ClusterTree::from_edges(std::vector<std::string> labels, std::span<const Edge> edges,
                                    std::vector<std::size_t> leaf_labels) {
  const std::size_t n = labels.size();
  if (n < 4) throw InvalidInput("a cluster tree needs at least 4 leaves, got " + std::to_string(n));
  validate_labels(labels);
  const std::size_t nodes = 2 * n - 2;
  if (edges.size() != nodes - 1)
    throw InvalidInput("expected " + std::to_string(nodes - 1) + " edges, got " + std::to_string(edges.size()));

  if (leaf_labels.empty()) {
    leaf_labels.resize(n);
    std::iota(leaf_labels.begin(), leaf_labels.end(), 0);
  }
  if (leaf_labels.size() != n) throw InvalidInput("leaf label mapping has the wrong size");

  ClusterTree t;
  t.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  t.adj_.assign(nodes, {-1, -1, -1});
  t.degree_.assign(nodes, 0);
  t.leaf_label_.assign(n, 0);
  t.label_leaf_.assign(n, -1);
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const std::size_t li = leaf_labels[leaf];
    if (li >= n || t.label_leaf_[li] != -1) throw InvalidInput("leaf label mapping is not a permutation");
    t.leaf_label_[leaf] = static_cast<std::uint32_t>(li);
    t.label_leaf_[li] = static_cast<NodeId>(leaf);
  }
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nodes || static_cast<std::size_t>(b) >= nodes || a == b)
      throw InvalidInput("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") is out of range");
    for (NodeId v : {a, b}) {
      const std::size_t cap = t.is_leaf(v) ? 1 : 3;
      if (t.degree_[v] >= cap) throw InvalidInput("node " + std::to_string(v) + " has too many edges");
    }
    t.adj_[a][t.degree_[a]++] = b;
    t.adj_[b][t.degree_[b]++] = a;
  }
  try {
    t.validate();
  } catch (const std::logic_error& e) {
    throw InvalidInput(e.what());
  }
  return t;
}

NodeId ClusterTree::leaf_named(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i)
    if ((*labels_)[i] == label) return label_leaf_[i];
  throw InvalidInput("no leaf labeled '" + std::string(label) + "'");
}

std::string ClusterTree::node_name(NodeId v) const {
  if (is_leaf(v)) return label(v);
  return "n" + std::to_string(static_cast<std::size_t>(v) - leaf_count());
}

std::vector<Edge> ClusterTree::edges() const {
  std::vector<Edge> out;
  out.reserve(node_count() - 1);
  for (NodeId v = 0; static_cast<std::size_t>(v) < node_count(); ++v)
    for (NodeId w : neighbors(v))
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

void ClusterTree::validate() const {
  const std::size_t n = leaf_count();
  if (n < 4) throw std::logic_error("fewer than 4 leaves");
  if (node_count() != 2 * n - 2) throw std::logic_error("node count is not 2n-2");
  std::size_t degree_sum = 0;
  for (NodeId v = 0; static_cast<std::size_t>(v) < node_count(); ++v) {
    const std::size_t want = is_leaf(v) ? 1 : 3;
    if (degree_[v] != want)
      throw std::logic_error("node " + node_name(v) + " has degree " + std::to_string(degree_[v]) + ", expected " +
                             std::to_string(want));
    for (NodeId w : neighbors(v)) {
      if (w < 0 || static_cast<std::size_t>(w) >= node_count() || w == v)
        throw std::logic_error("node " + node_name(v) + " has an invalid neighbor");
      auto back = neighbors(w);
      if (std::count(back.begin(), back.end(), v) != 1) throw std::logic_error("adjacency is not symmetric");
    }
    degree_sum += degree_[v];
  }
  if (degree_sum != 2 * (node_count() - 1)) throw std::logic_error("edge count is not 2n-3");
  // 2n-3 edges on 2n-2 nodes: connected iff acyclic.
  std::vector<char> seen(node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != node_count()) throw std::logic_error("tree is disconnected (so it has a cycle)");
  for (std::size_t li = 0; li < n; ++li)
    if (leaf_label_[label_leaf_[li]] != li) throw std::logic_error("leaf label mapping is inconsistent");
}

bool ClusterTree::is_valid() const noexcept {
  try {
    validate();
    return true;
  } catch (...) {
    return false;
  }
}

std::vector<std::uint16_t> ClusterTree::leaf_distances() const {
  const std::size_t n = leaf_count();
  std::vector<std::uint16_t> dist(n * n, 0);
  std::vector<std::uint16_t> depth(node_count());
  std::vector<NodeId> queue(node_count());
  std::vector<NodeId> from(node_count());
  for (std::size_t li = 0; li < n; ++li) {
    const NodeId src = label_leaf_[li];
    std::size_t head = 0, tail = 0;
    queue[tail++] = src;
    depth[src] = 0;
    from[src] = -1;
    while (head < tail) {
      NodeId v = queue[head++];
      for (NodeId w : neighbors(v)) {
        if (w == from[v]) continue;
        from[w] = v;
        depth[w] = static_cast<std::uint16_t>(depth[v] + 1);
        if (is_leaf(w)) dist[li * n + leaf_label_[w]] = depth[w];
        else queue[tail++] = w;
      }
    }
  }
  return dist;
}

std::vector<NodeId> ClusterTree::parents(NodeId root) const {
  std::vector<NodeId> parent(node_count(), -2);
  std::vector<NodeId> stack{root};
  parent[root] = -1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : neighbors(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return parent;
}

std::vector<std::vector<bool>> ClusterTree::splits() const {
  const std::size_t n = leaf_count();
  const NodeId root = label_leaf_[0];
  auto parent = parents(root);
  // Post-order accumulation of leaf sets below every node.
  std::vector<NodeId> order;
  order.reserve(node_count());
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (NodeId w : neighbors(v))
      if (w != parent[v]) stack.push_back(w);
  }
  std::vector<std::vector<bool>> below(node_count(), std::vector<bool>(n, false));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (is_leaf(v)) below[v][leaf_label_[v]] = true;
    if (parent[v] >= 0) {
      auto& up = below[parent[v]];
      for (std::size_t i = 0; i < n; ++i)
        if (below[v][i]) up[i] = true;
    }
  }
  std::vector<std::vector<bool>> out;
  for (NodeId v : order)
    if (v != root) out.push_back(below[v]);  // never contains label 0
  return out;
}

bool ClusterTree::has_split(std::span<const std::size_t> group) const {
  const std::size_t n = leaf_count();
  std::vector<bool> want(n, false);
  for (auto g : group) {
    if (g >= n) throw InvalidInput("label index out of range");
    want[g] = true;
  }
  if (want[0]) want.flip();
  for (const auto& s : splits())
    if (s == want) return true;
  return false;
}

void ClusterTree::swap_leaf_labels(NodeId a, NodeId b) noexcept {
  std::swap(leaf_label_[a], leaf_label_[b]);
  label_leaf_[leaf_label_[a]] = a;
  label_leaf_[leaf_label_[b]] = b;
}

void ClusterTree::replace_neighbor(NodeId v, NodeId old_neighbor, NodeId new_neighbor) {
  for (std::size_t k = 0; k < degree_[v]; ++k) {
    if (adj_[v][k] == old_neighbor) {
      adj_[v][k] = new_neighbor;
      return;
    }
  }
  throw std::logic_error("replace_neighbor: " + std::to_string(old_neighbor) + " is not adjacent to " +
                         std::to_string(v));
}

void ClusterTree::set_neighbors(NodeId v, std::span<const NodeId> nbrs) {
  if (nbrs.size() > 3) throw std::logic_error("set_neighbors: more than 3 neighbors");
  adj_[v] = {-1, -1, -1};
  std::copy(nbrs.begin(), nbrs.end(), adj_[v].begin());
  degree_[v] = static_cast<std::uint8_t>(nbrs.size());
}

bool operator==(const ClusterTree& a, const ClusterTree& b) {
  return a.labels() == b.labels() && a.leaf_label_ == b.leaf_label_ && a.edges() == b.edges();
}

}  // namespace ncdtree
