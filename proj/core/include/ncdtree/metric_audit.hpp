#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "ncdtree/distance_matrix.hpp"

namespace ncdtree {

struct MetricAuditReport {
  double max_symmetry_deviation = 0.0;
  /// max over distinct (x,y,z) of d(x,y) - d(x,z) - d(z,y), clipped at 0.
  double max_triangle_violation = 0.0;
  std::array<std::size_t, 3> worst_triple{};  // x, y, z of the worst violation
  std::size_t triangle_violations = 0;       // triples with a positive violation
  std::size_t negative_entries = 0;
  std::size_t entries_above_bound = 0;  // > kUpperBound
  double max_self_distance = 0.0;
  double tolerance = 0.0;
  bool pass = true;  // symmetry and triangle maxima within tolerance

  static constexpr double kUpperBound = 1.1;

  std::string to_text() const;
};

/// Exhaustive audit: all pairs for symmetry, all ordered triples for the
/// triangle inequality.
MetricAuditReport audit_metric(const DistanceMatrix& m, double tolerance);

}  // namespace ncdtree
