#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "ncdtree/cluster_tree.hpp"
#include "ncdtree/distance_matrix.hpp"

namespace ncdtree {

/// The three ways to split {u,v,w,x} into two sibling pairs.
enum class Pairing : std::uint8_t {
  UvWx,  // uv|wx
  UwVx,  // uw|vx
  UxVw,  // ux|vw
};

struct QuartetTopology {
  std::array<std::string, 4> labels;  // u, v, w, x
  Pairing pairing = Pairing::UvWx;

  std::pair<std::array<std::string, 2>, std::array<std::string, 2>> pairs() const;
  /// "u v | w x"
  std::string to_string() const;

  friend bool operator==(const QuartetTopology&, const QuartetTopology&) = default;
};

/// The unique pairing consistent with `tree`, by the four-point condition on
/// unit-edge leaf distances. Throws InvalidInput for unknown or repeated labels.
QuartetTopology consistent_topology(const ClusterTree& tree, const std::array<std::string, 4>& labels);

/// d(pair1) + d(pair2). Throws InvalidInput if a label is not in the matrix.
double quartet_cost(const DistanceMatrix& matrix, const QuartetTopology& topology);

/// C_T, m, M and S(T) = (M - C_T) / (M - m); S is 1 when M == m.
struct TreeScore {
  double cost = 0.0;      // C_T
  double min_cost = 0.0;  // m
  double max_cost = 0.0;  // M
  double s = 0.0;
};

/// n choose 4. Throws InvalidInput for n < 4.
std::uint64_t count_quartets(std::uint64_t n);

/// Scores trees against one matrix. Construction sums m and M over all
/// quartets once; each `score` call only recomputes C_T.
///
/// Quartets are visited as a < b < c < d over matrix indices, pairings in the
/// order ab|cd, ac|bd, ad|bc, and each pairing's cost is d(first pair) +
/// d(second pair) in that order.
class QuartetScorer {
 public:
  /// Requires n >= 4.
  explicit QuartetScorer(const DistanceMatrix& matrix);

  /// Tree leaves must carry exactly the matrix labels.
  TreeScore score(const ClusterTree& tree) const;

  /// C_T <= m + epsilon * M.
  bool is_perfect(const TreeScore& score, double epsilon) const noexcept;

  double min_cost() const noexcept { return min_cost_; }
  double max_cost() const noexcept { return max_cost_; }
  const DistanceMatrix& matrix() const noexcept { return *matrix_; }

 private:
  std::vector<std::size_t> matrix_order(const ClusterTree& tree) const;

  const DistanceMatrix* matrix_;
  double min_cost_ = 0.0;
  double max_cost_ = 0.0;
};

TreeScore score(const ClusterTree& tree, const DistanceMatrix& matrix);

/// Number of the 3 * C(n,4) quartet topologies the tree is consistent with,
/// counted pairing by pairing (a pairing is consistent when its leaf-distance
/// sum is strictly below both alternatives).
std::uint64_t count_consistent_topologies(const ClusterTree& tree);

/// True if both trees (over the same label set) induce the same consistent
/// topology on every quartet.
bool same_quartet_topologies(const ClusterTree& a, const ClusterTree& b);

}  // namespace ncdtree
