#include <algorithm>
#include <numeric>
#include <random>

#include "fullerene/reroute.hpp"
#include "fullerene/search.hpp"

namespace fullerene {

CycleState heuristic_long_cycle(const FullereneGraph& g, std::uint64_t seed, int radius) {
  std::mt19937_64 rng(seed);
  std::vector<FaceId> order(g.num_faces());
  std::iota(order.begin(), order.end(), 0);

  // Start from one face boundary and keep absorbing neighboring faces whose
  // unvisited part is longer than the shared part; the cycle stays the
  // boundary of a growing disc of faces.
  const FaceId seed_face = static_cast<FaceId>(rng() % static_cast<std::uint64_t>(g.num_faces()));
  CycleState current(g, canonical_cycle(g.face(seed_face).boundary));
  bool grew = true;
  while (grew) {
    grew = false;
    // Fisher-Yates with the engine directly keeps runs identical across
    // standard library implementations.
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    for (FaceId f : order) {
      if (auto move = face_segment_swap(g, current, f)) {
        current = move->apply(g, current);
        grew = true;
      }
    }
  }
  return improve_until_stable(g, current, radius);
}

}  // namespace fullerene
