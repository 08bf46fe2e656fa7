#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncdtree/cluster_tree.hpp"
#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/quartet.hpp"

namespace ncdtree {

struct SearchConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_stale = 100000;
  std::optional<double> time_budget;  // seconds
  unsigned workers = 1;
  double s_one_epsilon = 1e-12;
  bool check_invariants = false;  // validate every candidate

  /// Throws InvalidInput when max_stale or workers is zero or the budget is
  /// not positive.
  void validate() const;
};

enum class HaltReason { Perfect, Stale, Time };

const char* to_string(HaltReason reason) noexcept;

struct TracePoint {
  std::uint64_t candidates = 0;
  double best_s = 0.0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SearchTrace {
  std::vector<TracePoint> points;  // starts at (0, S of the start tree)
  std::uint64_t total_candidates = 0;
  HaltReason halt = HaltReason::Stale;
};

struct SearchResult {
  ClusterTree tree;
  TreeScore score;
  SearchTrace trace;
};

/// Randomized hill climbing. Each candidate is a full mutation of the current
/// best tree and replaces it only with a strictly larger S. Halts on a perfect
/// tree, after max_stale consecutive rejections, or when the budget runs out.
///
/// With workers > 1 the climbers start from different trees, publish their
/// improvements to a shared best, and pick it up when it beats their own.
/// Only workers == 1 is reproducible.
///
/// Requires a symmetric matrix with n >= 4.
SearchResult hill_climb(const DistanceMatrix& matrix, const SearchConfig& config);

/// "candidates,best_S" followed by one line per trace point.
std::string trace_to_csv(const SearchTrace& trace);

}  // namespace ncdtree
