#pragma once

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "fullerene/cycle.hpp"
#include "fullerene/graph.hpp"

namespace fullerene {

enum class MoveKind { segment_swap, bounded_local };

struct RerouteMove {
  MoveKind kind = MoveKind::segment_swap;
  std::vector<FaceId> region;
  std::vector<EdgeId> removed;
  std::vector<EdgeId> added;
  int delta = 0;

  /// The rerouted cycle. Throws std::invalid_argument if the move does not
  /// fit `c` or does not produce a simple cycle of length c + delta.
  CycleState apply(const FullereneGraph& g, const CycleState& c) const;
  nlohmann::json to_json(const FullereneGraph& g) const;
};

/// If the cycle meets the boundary of `face` in one path P from a to b and
/// the rest of the boundary, Q from a to b, has only white inner vertices
/// and more edges than P, returns the move replacing P by Q.
std::optional<RerouteMove> face_segment_swap(const FullereneGraph& g, const CycleState& c,
                                             FaceId face);

/// Vertices within graph distance `radius` of the boundaries of `region`.
std::vector<Vertex> neighborhood(const FullereneGraph& g, std::span<const FaceId> region,
                                 int radius);

/// Longest cycle that keeps every cycle edge outside the neighborhood, may
/// use any edge with both ends inside it, and avoids `forbidden`. Ties go to
/// the first one in a fixed scan order. nullopt if none exists.
std::optional<CycleState> best_local_cycle(const FullereneGraph& g, const CycleState& c,
                                           std::span<const FaceId> region, int radius,
                                           const std::vector<Vertex>& forbidden = {});

/// Exhaustive search of the cycles that differ from `c` only on edges inside
/// neighborhood(region, radius); returns the longest strictly improving one.
/// Requires 0 <= radius <= 3.
std::optional<RerouteMove> bounded_local_reroute(const FullereneGraph& g, const CycleState& c,
                                                 std::span<const FaceId> region, int radius);

struct ImproveStats {
  int iterations = 0;
  int segment_swaps = 0;
  int local_reroutes = 0;
};

/// Local search: segment swaps over all faces (ascending id), then bounded
/// reroutes around each face holding a white vertex; the first improving
/// move is applied and the scan restarts until nothing improves.
CycleState improve_until_stable(const FullereneGraph& g, const CycleState& c, int radius,
                                ImproveStats* stats = nullptr);

}  // namespace fullerene
