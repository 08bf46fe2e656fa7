#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncdtree {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Unrooted tree with n labeled leaves of degree 1 and n-2 internal nodes of
/// degree 3 (n >= 4).
///
/// Node ids 0..n-1 are leaves, n..2n-3 are internal nodes named "n0", "n1", ...
/// Which label sits on which leaf is a separate mapping, so a leaf swap only
/// exchanges two labels and leaves the shape alone.
class ClusterTree {
 public:
  /// Builds and validates a tree from an edge list over node ids 0..2n-3.
  /// `leaf_labels[leaf]` is the index into `labels` carried by that leaf;
  /// empty means leaf i carries label i.
  static ClusterTree from_edges(std::vector<std::string> labels, std::span<const Edge> edges,
                                std::vector<std::size_t> leaf_labels = {});

  std::size_t leaf_count() const noexcept { return label_leaf_.size(); }
  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t internal_count() const noexcept { return adj_.size() - label_leaf_.size(); }

  bool is_leaf(NodeId v) const noexcept { return static_cast<std::size_t>(v) < leaf_count(); }
  std::span<const NodeId> neighbors(NodeId v) const noexcept { return {adj_[v].data(), degree_[v]}; }
  std::size_t degree(NodeId v) const noexcept { return degree_[v]; }

  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  std::shared_ptr<const std::vector<std::string>> shared_labels() const noexcept { return labels_; }
  std::size_t label_index(NodeId leaf) const noexcept { return leaf_label_[leaf]; }
  const std::string& label(NodeId leaf) const { return (*labels_)[leaf_label_[leaf]]; }
  NodeId leaf_of(std::size_t label_index) const noexcept { return label_leaf_[label_index]; }
  /// Leaf node carrying `label`; throws InvalidInput if absent.
  NodeId leaf_named(std::string_view label) const;

  /// Leaf label, or "n<k>" for internal node n+k.
  std::string node_name(NodeId v) const;

  /// Each undirected edge once as (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;

  /// Throws std::logic_error describing the first broken invariant.
  void validate() const;
  bool is_valid() const noexcept;

  /// Unit-edge path lengths between leaves, indexed by label index.
  std::vector<std::uint16_t> leaf_distances() const;

  /// Parent of every node when rooted at `root` (root's parent is -1).
  std::vector<NodeId> parents(NodeId root) const;

  /// For every edge, the label indices on the side away from label 0's leaf
  /// (as a mask over label indices). One entry per edge.
  std::vector<std::vector<bool>> splits() const;

  /// True if some edge separates exactly `group` (label indices) from the rest.
  bool has_split(std::span<const std::size_t> group) const;

  // Low-level editing used by the mutation operators. Callers restore the
  // degree invariants themselves.
  void swap_leaf_labels(NodeId a, NodeId b) noexcept;
  void replace_neighbor(NodeId v, NodeId old_neighbor, NodeId new_neighbor);
  void set_neighbors(NodeId v, std::span<const NodeId> nbrs);

  friend bool operator==(const ClusterTree& a, const ClusterTree& b);

 private:
  ClusterTree() = default;

  std::shared_ptr<const std::vector<std::string>> labels_;
  std::vector<std::array<NodeId, 3>> adj_;
  std::vector<std::uint8_t> degree_;
  std::vector<std::uint32_t> leaf_label_;  // leaf node -> label index
  std::vector<NodeId> label_leaf_;         // label index -> leaf node
};

}  // namespace ncdtree
