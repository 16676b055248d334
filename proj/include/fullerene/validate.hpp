#pragma once

#include <string>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

struct ValidationCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* find(const std::string& name) const;
  /// "name: detail" lines for every failed check.
  std::string failures() const;
};

/// Checks every fullerene invariant and reports each one separately.
/// Check names: vertex_count, cubic_simple, darts_partitioned,
/// faces_distinct_across, face_sizes, pentagon_count, euler, three_connected.
ValidationReport validate_fullerene(const FullereneGraph& g);

/// Exhaustive vertex-cut search: true iff no set of at most two vertices
/// disconnects g. O(n^3).
bool is_three_connected(const FullereneGraph& g);

}  // namespace fullerene
