#include "fullerene/cycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fullerene {

std::optional<std::string> cycle_defect(const FullereneGraph& g,
                                        const std::vector<Vertex>& order) {
  const int k = static_cast<int>(order.size());
  if (k < 5) return "cycle has " + std::to_string(k) + " vertices; fullerene girth is 5";
  std::vector<char> seen(g.n(), 0);
  for (int i = 0; i < k; ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
    seen[v] = 1;
    const Vertex next = order[(i + 1) % k];
    if (next < 0 || next >= g.n() || !g.adjacent(v, next)) {
      return "vertices " + std::to_string(v) + " and " + std::to_string(next) +
             " are not adjacent";
    }
  }
  return std::nullopt;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> order) {
  if (order.empty()) return order;
  const auto lead = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), lead, order.end());
  if (order.size() > 2 && order.back() < order[1]) std::reverse(order.begin() + 1, order.end());
  return order;
}

CycleState::CycleState(const FullereneGraph& g, std::vector<Vertex> order)
    : order_(std::move(order)), on_vertex_(g.n(), 0), on_edge_(g.num_edges(), 0) {
  if (order_.empty()) return;
  if (auto defect = cycle_defect(g, order_)) throw std::invalid_argument(*defect);
  const int k = length();
  for (int i = 0; i < k; ++i) {
    on_vertex_[order_[i]] = 1;
    on_edge_[g.edge_id(order_[i], order_[(i + 1) % k])] = 1;
  }
}

CycleState CycleState::from_edges(const FullereneGraph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return CycleState(g, {});
  std::vector<std::vector<Vertex>> incident(g.n());
  for (EdgeId e : edges) {
    const auto [u, v] = g.edge(e);
    incident[u].push_back(v);
    incident[v].push_back(u);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!incident[v].empty() && incident[v].size() != 2) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has cycle degree " +
                                  std::to_string(incident[v].size()));
    }
  }
  const Vertex start = g.edge(edges.front()).first;
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = incident[start][0];
  while (cur != start) {
    order.push_back(cur);
    const Vertex next = incident[cur][0] == prev ? incident[cur][1] : incident[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != edges.size()) {
    throw std::invalid_argument("edge set is a union of several cycles");
  }
  return CycleState(g, canonical_cycle(std::move(order)));
}

std::vector<EdgeId> CycleState::edge_list() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(on_edge_.size()); ++e) {
    if (on_edge_[e]) out.push_back(e);
  }
  return out;
}

std::vector<Vertex> CycleState::canonical_order() const { return canonical_cycle(order_); }

}  // namespace fullerene
