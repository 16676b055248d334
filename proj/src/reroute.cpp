#include "fullerene/reroute.hpp"

#include <algorithm>
#include <stdexcept>

#include "fullerene/classify.hpp"

namespace fullerene {

namespace {

std::vector<EdgeId> sorted(std::vector<EdgeId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RerouteMove diff_move(MoveKind kind, std::vector<FaceId> region, const CycleState& from,
                      const CycleState& to) {
  RerouteMove move;
  move.kind = kind;
  move.region = std::move(region);
  const auto a = from.edge_list();
  const auto b = to.edge_list();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(move.removed));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(move.added));
  move.delta = to.length() - from.length();
  return move;
}

// Exhaustive search for the local reroute. Fixed cycle edges (outside the
// neighborhood) form disjoint segments that every candidate must keep; the
// search strings them together with free edges.
class LocalSearch {
 public:
  LocalSearch(const FullereneGraph& g, const CycleState& c, const std::vector<char>& inside,
              const std::vector<char>& forbidden)
      : g_(g), n_(g.n()), fixed_(g.num_edges(), 0), free_(g.num_edges(), 0),
        fixed_degree_(n_, 0), partner_(n_, -1), segment_length_(n_, 0), visited_(n_, 0) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.edge(e);
      const bool local = inside[u] && inside[v];
      if (c.contains_edge(e) && !local) {
        fixed_[e] = 1;
        ++fixed_degree_[u];
        ++fixed_degree_[v];
        if (forbidden[u] || forbidden[v]) infeasible_ = true;
      }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.edge(e);
      free_[e] = inside[u] && inside[v] && !forbidden[u] && !forbidden[v] &&
                 fixed_degree_[u] < 2 && fixed_degree_[v] < 2;
    }
    // Walk each fixed segment from one endpoint to the other.
    for (Vertex v = 0; v < n_; ++v) {
      if (fixed_degree_[v] != 1 || partner_[v] >= 0) continue;
      Vertex prev = -1, cur = v;
      int length = 0;
      while (true) {
        Vertex next = -1;
        for (int s = 0; s < 3; ++s) {
          const Vertex u = g.neighbors(cur)[s];
          if (u != prev && fixed_[g.edge_at(cur, s)]) next = u;
        }
        if (next < 0) break;
        ++length;
        prev = cur;
        cur = next;
        if (fixed_degree_[cur] == 1) break;
      }
      partner_[v] = cur;
      partner_[cur] = v;
      segment_length_[v] = segment_length_[cur] = length;
      segments_.push_back(v);
      total_inner_ += length - 1;
    }
    // Whole cycle fixed: nothing can change.
    int fixed_count = 0;
    for (char f : fixed_) fixed_count += f;
    if (fixed_count > 0 && segments_.empty()) infeasible_ = true;
    for (Vertex v = 0; v < n_; ++v) {
      if ((inside[v] && !forbidden[v] && fixed_degree_[v] == 0) || fixed_degree_[v] == 1) {
        ++candidate_vertices_;
      }
    }
  }

  /// Only cycles longer than `floor` are reported.
  std::optional<std::vector<EdgeId>> run(int floor) {
    if (infeasible_) return std::nullopt;
    best_length_ = floor;
    if (segments_.empty()) {
      // No fixed edges: any cycle inside the neighborhood, rooted at its
      // smallest vertex.
      for (Vertex root = 0; root < n_; ++root) {
        if (!has_free_edge(root)) continue;
        start_ = root;
        visited_[root] = 1;
        visited_total_ = 1;
        extend(root, 0);
        // Later roots only see vertices above them, so the root stays
        // visited.
        --candidate_vertices_;
      }
    } else {
      start_ = segments_.front();
      const Vertex other = partner_[start_];
      visited_[start_] = visited_[other] = 1;
      visited_total_ = 2;
      used_segments_ = 1;
      used_inner_ = segment_length_[start_] - 1;
      extend(other, segment_length_[start_]);
    }
    if (best_free_.empty()) return std::nullopt;
    std::vector<EdgeId> edges = best_free_;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (fixed_[e]) edges.push_back(e);
    }
    return edges;
  }

 private:
  bool has_free_edge(Vertex v) const {
    for (int s = 0; s < 3; ++s) {
      if (free_[g_.edge_at(v, s)]) return true;
    }
    return false;
  }

  // `end` is the current path end, ready to leave along a free edge.
  // `length` counts path edges.
  void extend(Vertex end, int length) {
    const int remaining_segments = static_cast<int>(segments_.size()) - used_segments_;
    // The path holds length + 1 vertices; at most every unvisited candidate
    // and every inner vertex of an unused segment can still join.
    if (length + 1 + (candidate_vertices_ - visited_total_) + (total_inner_ - used_inner_) <=
        best_length_) {
      return;
    }
    std::array<std::pair<Vertex, EdgeId>, 3> options;
    int count = 0;
    for (int s = 0; s < 3; ++s) {
      const EdgeId e = g_.edge_at(end, s);
      if (free_[e]) options[count++] = {g_.neighbors(end)[s], e};
    }
    std::sort(options.begin(), options.begin() + count);
    for (int i = 0; i < count; ++i) {
      const auto [u, e] = options[i];
      if (u == start_) {
        if (remaining_segments == 0 && length + 1 >= 3 && length + 1 > best_length_) {
          best_length_ = length + 1;
          best_free_ = free_path_;
          best_free_.push_back(e);
        }
        continue;
      }
      if (visited_[u]) continue;
      free_path_.push_back(e);
      visited_[u] = 1;
      ++visited_total_;
      if (fixed_degree_[u] == 1) {
        const Vertex other = partner_[u];
        if (!visited_[other]) {
          visited_[other] = 1;
          ++visited_total_;
          ++used_segments_;
          used_inner_ += segment_length_[u] - 1;
          extend(other, length + 1 + segment_length_[u]);
          used_inner_ -= segment_length_[u] - 1;
          --used_segments_;
          --visited_total_;
          visited_[other] = 0;
        }
      } else {
        extend(u, length + 1);
      }
      --visited_total_;
      visited_[u] = 0;
      free_path_.pop_back();
    }
  }

  const FullereneGraph& g_;
  int n_;
  std::vector<char> fixed_, free_;
  std::vector<int> fixed_degree_;
  std::vector<Vertex> partner_;
  std::vector<int> segment_length_;
  std::vector<Vertex> segments_;
  std::vector<char> visited_;
  std::vector<EdgeId> free_path_, best_free_;
  int total_inner_ = 0;
  int used_inner_ = 0;
  int candidate_vertices_ = 0;
  int visited_total_ = 0;
  int used_segments_ = 0;
  int best_length_ = -1;
  Vertex start_ = -1;
  bool infeasible_ = false;
};

}  // namespace

CycleState RerouteMove::apply(const FullereneGraph& g, const CycleState& c) const {
  std::vector<EdgeId> edges = c.edge_list();
  for (EdgeId e : removed) {
    if (!c.contains_edge(e)) throw std::invalid_argument("move removes an edge not on the cycle");
  }
  for (EdgeId e : added) {
    if (c.contains_edge(e)) throw std::invalid_argument("move adds an edge already on the cycle");
  }
  const auto gone = sorted(removed);
  std::erase_if(edges, [&](EdgeId e) { return std::binary_search(gone.begin(), gone.end(), e); });
  edges.insert(edges.end(), added.begin(), added.end());
  CycleState out = CycleState::from_edges(g, edges);
  if (out.length() != c.length() + delta) {
    throw std::invalid_argument("move delta does not match the rerouted cycle");
  }
  return out;
}

nlohmann::json RerouteMove::to_json(const FullereneGraph& g) const {
  auto pairs = [&](const std::vector<EdgeId>& edges) {
    nlohmann::json out = nlohmann::json::array();
    for (EdgeId e : edges) out.push_back({g.edge(e).first, g.edge(e).second});
    return out;
  };
  return {{"kind", kind == MoveKind::segment_swap ? "segment_swap" : "bounded_local"},
          {"region", region},
          {"removed", pairs(removed)},
          {"added", pairs(added)},
          {"delta", delta}};
}

std::optional<RerouteMove> face_segment_swap(const FullereneGraph& g, const CycleState& c,
                                             FaceId face_id) {
  const Face& face = g.face(face_id);
  const int k = face.size();
  int on = 0;
  for (int i = 0; i < k; ++i) on += c.contains_edge(face.edge(i));
  if (on == 0 || on == k) return std::nullopt;
  // P must be one run of cycle edges: find its first edge (preceded by an
  // edge off the cycle) and check that the run is the only one.
  int first = -1, runs = 0;
  for (int i = 0; i < k; ++i) {
    if (c.contains_edge(face.edge(i)) && !c.contains_edge(face.edge(i - 1))) {
      ++runs;
      first = i;
    }
  }
  if (runs != 1) return std::nullopt;
  const int p_edges = on;
  const int q_edges = k - on;
  if (q_edges <= p_edges) return std::nullopt;
  // Q runs from the end of P back to its start; its inner vertices are the
  // boundary vertices strictly between.
  for (int j = 1; j < q_edges; ++j) {
    if (c.contains_vertex(face.vertex(first + p_edges + j))) return std::nullopt;
  }
  RerouteMove move;
  move.kind = MoveKind::segment_swap;
  move.region = {face_id};
  for (int i = 0; i < p_edges; ++i) move.removed.push_back(face.edge(first + i));
  for (int j = 0; j < q_edges; ++j) move.added.push_back(face.edge(first + p_edges + j));
  move.delta = q_edges - p_edges;
  return move;
}

std::vector<Vertex> neighborhood(const FullereneGraph& g, std::span<const FaceId> region,
                                 int radius) {
  std::vector<int> dist(g.n(), -1);
  std::vector<Vertex> queue;
  for (FaceId f : region) {
    for (Vertex v : g.face(f).boundary) {
      if (dist[v] < 0) {
        dist[v] = 0;
        queue.push_back(v);
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (dist[v] == radius) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

namespace {

std::optional<CycleState> local_cycle(const FullereneGraph& g, const CycleState& c,
                                      std::span<const FaceId> region, int radius,
                                      const std::vector<Vertex>& forbidden, int floor) {
  if (radius < 0 || radius > 3) throw std::invalid_argument("reroute radius must be in [0, 3]");
  std::vector<char> inside(g.n(), 0), banned(g.n(), 0);
  for (Vertex v : neighborhood(g, region, radius)) inside[v] = 1;
  for (Vertex v : forbidden) banned.at(v) = 1;
  LocalSearch search(g, c, inside, banned);
  auto edges = search.run(floor);
  if (!edges) return std::nullopt;
  return CycleState::from_edges(g, *edges);
}

}  // namespace

std::optional<CycleState> best_local_cycle(const FullereneGraph& g, const CycleState& c,
                                           std::span<const FaceId> region, int radius,
                                           const std::vector<Vertex>& forbidden) {
  return local_cycle(g, c, region, radius, forbidden, -1);
}

std::optional<RerouteMove> bounded_local_reroute(const FullereneGraph& g, const CycleState& c,
                                                 std::span<const FaceId> region, int radius) {
  auto best = local_cycle(g, c, region, radius, {}, c.length());
  if (!best || best->length() <= c.length()) return std::nullopt;
  return diff_move(MoveKind::bounded_local, {region.begin(), region.end()}, c, *best);
}

CycleState improve_until_stable(const FullereneGraph& g, const CycleState& c, int radius,
                                ImproveStats* stats) {
  ImproveStats local;
  CycleState current = c;
  while (!current.empty()) {
    std::optional<RerouteMove> move;
    for (FaceId f = 0; f < g.num_faces() && !move; ++f) move = face_segment_swap(g, current, f);
    if (move) {
      ++local.segment_swaps;
    } else {
      const FaceColoring coloring = color(g, current);
      for (FaceId f = 0; f < g.num_faces() && !move; ++f) {
        if (coloring.face_whites[f] == 0) continue;
        const FaceId region[] = {f};
        move = bounded_local_reroute(g, current, region, radius);
      }
      if (move) ++local.local_reroutes;
    }
    if (!move) break;
    current = move->apply(g, current);
    ++local.iterations;
  }
  if (stats) *stats = local;
  return current;
}

}  // namespace fullerene
