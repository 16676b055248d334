#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fullerene/cycle.hpp"
#include "fullerene/graph.hpp"

namespace fullerene {

struct SearchBudget {
  std::int64_t node_limit = 100'000'000;
  double time_limit = 60.0;  // seconds
  /// Stop as soon as a cycle of at least this length is found.
  std::optional<int> target_length;
  /// Root vertices are distributed over this many workers. The result does
  /// not depend on it when the search completes.
  int threads = 1;
  /// Called (serialized) every time the incumbent improves.
  std::function<void(const CycleState&)> on_incumbent;
};

struct SearchResult {
  CycleState cycle;
  /// True iff the search proved that no longer cycle exists.
  bool optimal = false;
  std::int64_t nodes = 0;
  double seconds = 0.0;
};

/// Branch-and-bound longest cycle avoiding `forbidden`. Among equally long
/// cycles the lexicographically least canonical order is returned. If the
/// budget runs out the best incumbent comes back with optimal = false. An
/// empty cycle means no cycle avoids the forbidden set.
SearchResult longest_cycle_exact(const FullereneGraph& g, const std::vector<Vertex>& forbidden,
                                 const SearchBudget& budget = {});

/// Plain exhaustive enumeration. Independent of longest_cycle_exact and
/// meant as its oracle; requires n <= 64. Same tie-breaking rule.
CycleState brute_force_longest_cycle(const FullereneGraph& g,
                                     const std::vector<Vertex>& forbidden = {});

/// Visits every simple cycle avoiding `forbidden` exactly once, as an order
/// starting at its smallest vertex. Stops early when `visit` returns false.
/// Requires n <= 64.
void for_each_cycle(const FullereneGraph& g, const std::vector<Vertex>& forbidden,
                    const std::function<bool(const std::vector<Vertex>&)>& visit);

/// Randomized face-growth construction followed by local improvement.
/// Deterministic for a fixed seed; no optimality claim.
CycleState heuristic_long_cycle(const FullereneGraph& g, std::uint64_t seed, int radius = 2);

}  // namespace fullerene
