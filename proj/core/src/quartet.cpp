#include "ncdtree/quartet.hpp"

#include <algorithm>
#include <unordered_map>

#include "ncdtree/errors.hpp"

namespace ncdtree {

std::pair<std::array<std::string, 2>, std::array<std::string, 2>> QuartetTopology::pairs() const {
  const auto& [u, v, w, x] = labels;
  switch (pairing) {
    case Pairing::UvWx: return {{u, v}, {w, x}};
    case Pairing::UwVx: return {{u, w}, {v, x}};
    case Pairing::UxVw: return {{u, x}, {v, w}};
  }
  return {};
}

std::string QuartetTopology::to_string() const {
  auto [p, q] = pairs();
  return p[0] + " " + p[1] + " | " + q[0] + " " + q[1];
}

QuartetTopology consistent_topology(const ClusterTree& tree, const std::array<std::string, 4>& labels) {
  std::array<std::size_t, 4> idx{};
  for (std::size_t k = 0; k < 4; ++k) {
    idx[k] = tree.label_index(tree.leaf_named(labels[k]));
    for (std::size_t j = 0; j < k; ++j)
      if (idx[j] == idx[k]) throw InvalidInput("quartet repeats label '" + labels[k] + "'");
  }
  const auto dist = tree.leaf_distances();
  const std::size_t n = tree.leaf_count();
  auto D = [&](std::size_t a, std::size_t b) { return dist[idx[a] * n + idx[b]]; };
  const int s1 = D(0, 1) + D(2, 3);
  const int s2 = D(0, 2) + D(1, 3);
  const int s3 = D(0, 3) + D(1, 2);
  Pairing p = Pairing::UvWx;
  if (s2 < s1 && s2 < s3) p = Pairing::UwVx;
  else if (s3 < s1 && s3 < s2) p = Pairing::UxVw;
  return {labels, p};
}

double quartet_cost(const DistanceMatrix& matrix, const QuartetTopology& topology) {
  auto at = [&](const std::string& label) {
    auto i = matrix.index_of(label);
    if (!i) throw InvalidInput("label '" + label + "' is not in the matrix");
    return *i;
  };
  auto [p, q] = topology.pairs();
  return matrix(at(p[0]), at(p[1])) + matrix(at(q[0]), at(q[1]));
}

std::uint64_t count_quartets(std::uint64_t n) {
  if (n < 4) throw InvalidInput("need at least 4 objects to form a quartet, got " + std::to_string(n));
  return n * (n - 1) / 2 * (n - 2) / 3 * (n - 3) / 4;
}

QuartetScorer::QuartetScorer(const DistanceMatrix& matrix) : matrix_(&matrix) {
  const std::size_t n = matrix.size();
  if (n < 4) throw InvalidInput("scoring needs at least 4 objects, got " + std::to_string(n));
  const auto& d = matrix;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          const double c1 = d(a, b) + d(c, e);
          const double c2 = d(a, c) + d(b, e);
          const double c3 = d(a, e) + d(b, c);
          min_cost_ += std::min(c1, std::min(c2, c3));
          max_cost_ += std::max(c1, std::max(c2, c3));
        }
}

std::vector<std::size_t> QuartetScorer::matrix_order(const ClusterTree& tree) const {
  // Tree label index for each matrix index.
  const auto& labels = tree.labels();
  const std::size_t n = matrix_->size();
  if (labels.size() != n)
    throw InvalidInput("tree has " + std::to_string(labels.size()) + " leaves but the matrix has " +
                       std::to_string(n) + " objects");
  std::vector<std::size_t> order(n);
  if (labels == matrix_->labels()) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    return order;
  }
  std::unordered_map<std::string_view, std::size_t> tree_index;
  for (std::size_t i = 0; i < n; ++i) tree_index.emplace(labels[i], i);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = tree_index.find(matrix_->label(i));
    if (it == tree_index.end()) throw InvalidInput("matrix label '" + matrix_->label(i) + "' is not a tree leaf");
    order[i] = it->second;
  }
  return order;
}

TreeScore QuartetScorer::score(const ClusterTree& tree) const {
  const std::size_t n = matrix_->size();
  const auto order = matrix_order(tree);
  const auto tree_dist = tree.leaf_distances();
  // Leaf distances re-indexed by matrix index.
  std::vector<int> L(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) L[i * n + j] = tree_dist[order[i] * n + order[j]];

  const auto& d = *matrix_;
  double cost = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const int* La = &L[a * n];
    for (std::size_t b = a + 1; b < n; ++b) {
      const int* Lb = &L[b * n];
      for (std::size_t c = b + 1; c < n; ++c) {
        const int* Lc = &L[c * n];
        for (std::size_t e = c + 1; e < n; ++e) {
          const int t1 = La[b] + Lc[e];
          const int t2 = La[c] + Lb[e];
          const int t3 = La[e] + Lb[c];
          if (t1 < t2 && t1 < t3) cost += d(a, b) + d(c, e);
          else if (t2 < t3) cost += d(a, c) + d(b, e);
          else cost += d(a, e) + d(b, c);
        }
      }
    }
  }
  TreeScore s{cost, min_cost_, max_cost_, 1.0};
  if (max_cost_ > min_cost_) s.s = (max_cost_ - cost) / (max_cost_ - min_cost_);
  return s;
}

bool QuartetScorer::is_perfect(const TreeScore& score, double epsilon) const noexcept {
  return score.cost <= score.min_cost + epsilon * score.max_cost;
}

TreeScore score(const ClusterTree& tree, const DistanceMatrix& matrix) { return QuartetScorer(matrix).score(tree); }

std::uint64_t count_consistent_topologies(const ClusterTree& tree) {
  const std::size_t n = tree.leaf_count();
  const auto L = tree.leaf_distances();
  auto D = [&](std::size_t i, std::size_t j) { return static_cast<int>(L[i * n + j]); };
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          const std::array<int, 3> t = {D(a, b) + D(c, e), D(a, c) + D(b, e), D(a, e) + D(b, c)};
          for (std::size_t k = 0; k < 3; ++k)
            if (t[k] < t[(k + 1) % 3] && t[k] < t[(k + 2) % 3]) ++count;
        }
  return count;
}

bool same_quartet_topologies(const ClusterTree& a, const ClusterTree& b) {
  const std::size_t n = a.leaf_count();
  if (b.leaf_count() != n) return false;
  // Map b's label indices onto a's.
  std::vector<std::size_t> to_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeId leaf = b.leaf_named(a.labels()[i]);
    to_b[i] = b.label_index(leaf);
  }
  const auto La = a.leaf_distances();
  const auto Lb = b.leaf_distances();
  auto best = [n](const std::vector<std::uint16_t>& L, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    const int t1 = L[p * n + q] + L[r * n + s];
    const int t2 = L[p * n + r] + L[q * n + s];
    const int t3 = L[p * n + s] + L[q * n + r];
    return t1 < t2 && t1 < t3 ? 0 : (t2 < t3 ? 1 : 2);
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
          if (best(La, p, q, r, s) != best(Lb, to_b[p], to_b[q], to_b[r], to_b[s])) return false;
  return true;
}

}  // namespace ncdtree
