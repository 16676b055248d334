#include "fullerene/graph.hpp"

#include <algorithm>

namespace fullerene {

namespace {

int find_slot(const Rotation& rotation, Vertex v, Vertex u) {
  for (int i = 0; i < 3; ++i) {
    if (rotation[v][i] == u) return i;
  }
  return -1;
}

// Edge ids are assigned scanning vertices ascending, slots ascending, for
// u < v. The numbering is shared by trace_faces and FullereneGraph.
std::vector<std::array<EdgeId, 3>> number_edges(const Rotation& rotation,
                                                std::vector<std::pair<Vertex, Vertex>>* edges) {
  const int n = static_cast<int>(rotation.size());
  std::vector<std::array<EdgeId, 3>> ids(n, {-1, -1, -1});
  for (Vertex u = 0; u < n; ++u) {
    for (int i = 0; i < 3; ++i) {
      const Vertex v = rotation[u][i];
      if (u < v) {
        const EdgeId e = static_cast<EdgeId>(edges->size());
        edges->emplace_back(u, v);
        ids[u][i] = e;
        ids[v][find_slot(rotation, v, u)] = e;
      }
    }
  }
  return ids;
}

struct Traced {
  std::vector<Face> faces;
  std::vector<std::array<FaceId, 3>> face_of_dart;
};

Traced trace(const Rotation& rotation, const std::vector<std::array<EdgeId, 3>>& edge_ids) {
  const int n = static_cast<int>(rotation.size());
  Traced out;
  out.face_of_dart.assign(n, {-1, -1, -1});
  for (Vertex s = 0; s < n; ++s) {
    for (int si = 0; si < 3; ++si) {
      if (out.face_of_dart[s][si] >= 0) continue;
      Face face;
      face.id = static_cast<FaceId>(out.faces.size());
      Vertex u = s;
      int ui = si;
      while (out.face_of_dart[u][ui] < 0) {
        out.face_of_dart[u][ui] = face.id;
        face.boundary.push_back(u);
        face.edges.push_back(edge_ids[u][ui]);
        const Vertex v = rotation[u][ui];
        const int back = find_slot(rotation, v, u);
        u = v;
        ui = (back + 2) % 3;
        if (static_cast<int>(face.boundary.size()) > 3 * n) {
          throw EmbeddingError("face tracing does not close");
        }
      }
      if (u != s || ui != si) {
        throw EmbeddingError("face tracing does not close at vertex " + std::to_string(s));
      }
      out.faces.push_back(std::move(face));
    }
  }
  for (Face& face : out.faces) {
    const int k = face.size();
    face.neighbors.resize(k);
    for (int i = 0; i < k; ++i) {
      const Vertex a = face.boundary[i];
      const Vertex b = face.boundary[(i + 1) % k];
      face.neighbors[i] = out.face_of_dart[b][find_slot(rotation, b, a)];
    }
  }
  return out;
}

}  // namespace

void check_rotation(const Rotation& rotation) {
  const int n = static_cast<int>(rotation.size());
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = rotation[v];
    for (int i = 0; i < 3; ++i) {
      const Vertex u = nb[i];
      if (u < 0 || u >= n) {
        throw EmbeddingError("vertex " + std::to_string(v) + " has out-of-range neighbor " +
                             std::to_string(u));
      }
      if (u == v) throw EmbeddingError("loop at vertex " + std::to_string(v));
      for (int j = 0; j < i; ++j) {
        if (nb[j] == u) {
          throw EmbeddingError("parallel edges between " + std::to_string(v) + " and " +
                               std::to_string(u));
        }
      }
      if (find_slot(rotation, u, v) < 0) {
        throw EmbeddingError("adjacency not symmetric: " + std::to_string(v) + " lists " +
                             std::to_string(u));
      }
    }
  }
}

std::vector<Face> trace_faces(const Rotation& rotation) {
  check_rotation(rotation);
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto ids = number_edges(rotation, &edges);
  return trace(rotation, ids).faces;
}

FullereneGraph::FullereneGraph(Rotation rotation) : rotation_(std::move(rotation)) {
  check_rotation(rotation_);
  edge_of_slot_ = number_edges(rotation_, &edges_);
  Traced traced = trace(rotation_, edge_of_slot_);
  faces_ = std::move(traced.faces);
  face_of_dart_ = std::move(traced.face_of_dart);
}

int FullereneGraph::slot(Vertex v, Vertex u) const { return find_slot(rotation_, v, u); }

EdgeId FullereneGraph::edge_id(Vertex u, Vertex v) const {
  const int i = slot(u, v);
  return i < 0 ? -1 : edge_of_slot_[u][i];
}

int FullereneGraph::count_faces_of_size(int k) const {
  return static_cast<int>(
      std::count_if(faces_.begin(), faces_.end(), [k](const Face& f) { return f.size() == k; }));
}

}  // namespace fullerene
