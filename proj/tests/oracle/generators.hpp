#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncdtree/bytes.hpp"
#include "ncdtree/cluster_tree.hpp"
#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/rng.hpp"

// Hand-rolled random input generators for property tests.
namespace ncdtree::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Rng& rng() { return rng_; }

  std::size_t size(std::size_t lo, std::size_t hi) { return lo + rng_.below(hi - lo + 1); }
  double real(double lo, double hi) { return lo + (hi - lo) * rng_.unit(); }

  Bytes random_bytes(std::size_t n);
  /// Words drawn from a small vocabulary: compressible, text-like.
  Bytes text(std::size_t n);
  /// Long runs of a few byte values.
  Bytes runs(std::size_t n);
  /// One of the three shapes above, or empty/tiny edge cases.
  Bytes any_bytes(std::size_t max_len);

  std::vector<std::string> labels(std::size_t n);
  /// Symmetric, zero diagonal, off-diagonal uniform in [lo, hi).
  DistanceMatrix symmetric_matrix(std::size_t n, double lo = 0.05, double hi = 1.0);
  ClusterTree tree(std::size_t n);
  /// Same tree with internal node ids and leaf nodes shuffled.
  ClusterTree renumbered(const ClusterTree& tree);

 private:
  Rng rng_;
};

}  // namespace ncdtree::testgen
