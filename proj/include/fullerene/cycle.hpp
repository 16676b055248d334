#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

/// A simple cycle of a FullereneGraph: cyclic vertex order plus membership
/// flags over vertices and edges. An empty order is the "no cycle" sentinel.
class CycleState {
 public:
  CycleState() = default;

  /// Throws std::invalid_argument unless `order` is a simple cycle of g
  /// (or empty).
  CycleState(const FullereneGraph& g, std::vector<Vertex> order);

  /// Builds the cycle formed by a set of edges. Throws unless the edges form
  /// exactly one simple cycle.
  static CycleState from_edges(const FullereneGraph& g, const std::vector<EdgeId>& edges);

  bool empty() const { return order_.empty(); }
  int length() const { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& order() const { return order_; }
  bool contains_vertex(Vertex v) const { return on_vertex_[v] != 0; }
  bool contains_edge(EdgeId e) const { return on_edge_[e] != 0; }
  std::vector<EdgeId> edge_list() const;

  /// Rotated and reflected so the smallest vertex leads and its smaller
  /// cycle neighbor comes second.
  std::vector<Vertex> canonical_order() const;

  bool operator==(const CycleState& other) const { return order_ == other.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<char> on_vertex_;
  std::vector<char> on_edge_;
};

/// Returns a description of the first violated invariant, or nullopt when
/// `order` is a simple cycle of g with length >= 5.
std::optional<std::string> cycle_defect(const FullereneGraph& g, const std::vector<Vertex>& order);

std::vector<Vertex> canonical_cycle(std::vector<Vertex> order);

}  // namespace fullerene
