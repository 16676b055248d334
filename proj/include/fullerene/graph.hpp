#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fullerene {

using Vertex = int;
using FaceId = int;
using EdgeId = int;

/// Clockwise neighbor order around every vertex of a cubic plane graph.
using Rotation = std::vector<std::array<Vertex, 3>>;

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Face {
  FaceId id = -1;
  /// Boundary vertices in tracing order. Edge i joins boundary[i] and
  /// boundary[(i + 1) % size].
  std::vector<Vertex> boundary;
  /// neighbors[i] is the face on the other side of boundary edge i.
  std::vector<FaceId> neighbors;
  /// edges[i] is the id of boundary edge i.
  std::vector<EdgeId> edges;

  int size() const { return static_cast<int>(boundary.size()); }
  Vertex vertex(int i) const {
    const int k = size();
    return boundary[((i % k) + k) % k];
  }
  EdgeId edge(int i) const {
    const int k = size();
    return edges[((i % k) + k) % k];
  }
  FaceId across(int i) const {
    const int k = size();
    return neighbors[((i % k) + k) % k];
  }
};

/// Throws EmbeddingError unless `rotation` lists exactly three distinct,
/// in-range, non-self neighbors per vertex with symmetric adjacency.
void check_rotation(const Rotation& rotation);

/// Traces the faces of a cubic rotation system. Walking the dart u->v, the
/// next dart leaves v towards the counterclockwise successor of u, i.e. the
/// entry before u in v's clockwise list. Each of the 3n darts lands in
/// exactly one face.
std::vector<Face> trace_faces(const Rotation& rotation);

/// A cubic plane graph given by its rotation system, together with the
/// traced faces and dense edge ids. Immutable once constructed. Holding one
/// does not imply the fullerene invariants; see validate_fullerene.
class FullereneGraph {
 public:
  explicit FullereneGraph(Rotation rotation);

  int n() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const Rotation& rotation() const { return rotation_; }
  std::span<const Vertex, 3> neighbors(Vertex v) const {
    return std::span<const Vertex, 3>(rotation_[v]);
  }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }

  /// Slot of `u` in the rotation of `v`, or -1 if they are not adjacent.
  int slot(Vertex v, Vertex u) const;
  bool adjacent(Vertex u, Vertex v) const { return slot(u, v) >= 0; }

  /// Edge id of uv, or -1 if not adjacent.
  EdgeId edge_id(Vertex u, Vertex v) const;
  EdgeId edge_at(Vertex v, int slot) const { return edge_of_slot_[v][slot]; }
  std::pair<Vertex, Vertex> edge(EdgeId e) const { return edges_[e]; }

  /// Faces incident with v (one per slot: the face traced along the dart
  /// leaving v through that slot).
  const std::array<FaceId, 3>& faces_at(Vertex v) const { return face_of_dart_[v]; }
  FaceId face_of_dart(Vertex v, int slot) const { return face_of_dart_[v][slot]; }

  int count_faces_of_size(int k) const;

 private:
  Rotation rotation_;
  std::vector<Face> faces_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::array<EdgeId, 3>> edge_of_slot_;
  std::vector<std::array<FaceId, 3>> face_of_dart_;
};

}  // namespace fullerene
