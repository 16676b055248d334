#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/generators.hpp"
#include "fullerene/graph.hpp"

namespace testing {

using fullerene::FullereneGraph;
using fullerene::Rotation;
using fullerene::Vertex;

// Cycle check written against the raw rotation, not CycleState.
inline bool is_simple_cycle(const FullereneGraph& g, const std::vector<Vertex>& order) {
  if (order.size() < 3) return false;
  std::set<Vertex> seen(order.begin(), order.end());
  if (seen.size() != order.size()) return false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex a = order[i];
    const Vertex b = order[(i + 1) % order.size()];
    if (a < 0 || a >= g.n()) return false;
    const auto& nb = g.rotation()[a];
    if (std::find(nb.begin(), nb.end(), b) == nb.end()) return false;
  }
  return true;
}

inline bool avoids(const std::vector<Vertex>& order, const std::vector<Vertex>& forbidden) {
  for (Vertex v : forbidden) {
    if (std::find(order.begin(), order.end(), v) != order.end()) return false;
  }
  return true;
}

// Neighbors sorted clockwise (decreasing angle) from a straight-line drawing.
inline Rotation rotation_from_drawing(const std::vector<std::pair<double, double>>& xy,
                                      const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(xy.size());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Rotation rot(xy.size());
  for (std::size_t v = 0; v < xy.size(); ++v) {
    auto angle = [&](int u) {
      return std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first);
    };
    std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
    for (int i = 0; i < 3; ++i) rot[v][i] = adj[v].at(i);
  }
  return rot;
}

// The cube as two nested squares.
inline Rotation cube_rotation() {
  std::vector<std::pair<double, double>> xy{{-2, 2}, {2, 2}, {2, -2}, {-2, -2},
                                            {-1, 1}, {1, 1}, {1, -1}, {-1, -1}};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(i, (i + 1) % 4);
    edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    edges.emplace_back(i, 4 + i);
  }
  return rotation_from_drawing(xy, edges);
}

// Two dodecahedra, each with edge uv removed, joined by uu' and vv'. Cubic
// and planar, but {u, v} separates the copies.
inline Rotation two_dodecahedra_rotation() {
  const FullereneGraph d = fullerene::generate_dodecahedron();
  const Vertex u = 0;
  const Vertex v = d.neighbors(0)[0];
  Rotation rot(40);
  for (Vertex x = 0; x < 20; ++x) {
    rot[x] = d.rotation()[x];
    // mirror image, so the copies face each other
    const auto& r = d.rotation()[x];
    rot[x + 20] = {r[0] + 20, r[2] + 20, r[1] + 20};
  }
  auto replace = [&](Vertex at, Vertex from, Vertex to) {
    std::replace(rot[at].begin(), rot[at].end(), from, to);
  };
  replace(u, v, u + 20);
  replace(v, u, v + 20);
  replace(u + 20, v + 20, u);
  replace(v + 20, u + 20, v);
  return rot;
}

}  // namespace testing
