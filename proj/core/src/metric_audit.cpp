#include "ncdtree/metric_audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncdtree {

MetricAuditReport audit_metric(const DistanceMatrix& m, double tolerance) {
  MetricAuditReport r;
  r.tolerance = tolerance;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.max_self_distance = i == 0 ? m(i, i) : std::max(r.max_self_distance, m(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      const double d = m(i, j);
      if (d < 0) ++r.negative_entries;
      if (d > MetricAuditReport::kUpperBound) ++r.entries_above_bound;
      if (j > i) r.max_symmetry_deviation = std::max(r.max_symmetry_deviation, std::abs(d - m(j, i)));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const double v = m(x, y) - m(x, z) - m(z, y);
        if (v > 0) {
          ++r.triangle_violations;
          if (v > r.max_triangle_violation) {
            r.max_triangle_violation = v;
            r.worst_triple = {x, y, z};
          }
        }
      }
    }
  }
  r.pass = r.max_symmetry_deviation <= tolerance && r.max_triangle_violation <= tolerance;
  return r;
}

std::string MetricAuditReport::to_text() const {
  std::ostringstream os;
  os.precision(15);
  os << "metric audit (tolerance " << tolerance << ")\n";
  os << "max_symmetry_deviation=" << max_symmetry_deviation << '\n';
  os << "max_triangle_violation=" << max_triangle_violation << '\n';
  os << "triangle_violations=" << triangle_violations << '\n';
  os << "negative_entries=" << negative_entries << '\n';
  os << "entries_above_" << kUpperBound << '=' << entries_above_bound << '\n';
  os << "max_self_distance=" << max_self_distance << '\n';
  os << "result=" << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace ncdtree
