#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fullerene/classify.hpp"
#include "fullerene/generators.hpp"
#include "fullerene/reroute.hpp"
#include "fullerene/search.hpp"
#include "support.hpp"

using namespace fullerene;

namespace {

CycleState optimum(const FullereneGraph& g, const std::vector<Vertex>& forbidden) {
  const SearchResult r = longest_cycle_exact(g, forbidden);
  REQUIRE(r.optimal);
  return r.cycle;
}

// Longest cycle that keeps every cycle edge leaving the ball and otherwise
// uses only edges inside it, by enumerating every cycle of the graph.
int oracle_local_best(const FullereneGraph& g, const CycleState& c,
                      const std::vector<Vertex>& ball) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : ball) in[v] = 1;
  std::vector<EdgeId> fixed;
  for (EdgeId e : c.edge_list()) {
    auto [a, b] = g.edge(e);
    if (!(in[a] && in[b])) fixed.push_back(e);
  }
  int best = -1;
  for_each_cycle(g, {}, [&](const std::vector<Vertex>& order) {
    if (static_cast<int>(order.size()) <= best) return true;
    std::set<EdgeId> edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
      edges.insert(g.edge_id(order[i], order[(i + 1) % order.size()]));
    }
    for (EdgeId e : fixed) {
      if (!edges.count(e)) return true;
    }
    for (EdgeId e : edges) {
      auto [a, b] = g.edge(e);
      if (!(in[a] && in[b]) && !std::binary_search(fixed.begin(), fixed.end(), e)) return true;
    }
    best = static_cast<int>(order.size());
    return true;
  });
  return best;
}

}  // namespace

TEST_CASE("pentagon segment swap") {
  const FullereneGraph g = generate_buckyball();
  const CycleState c = optimum(g, {4, 2});
  REQUIRE(c.length() == 58);
  const std::optional<RerouteMove> move = face_segment_swap(g, c, 2);
  REQUIRE(move.has_value());
  CHECK(move->kind == MoveKind::segment_swap);
  CHECK(move->delta == 1);
  CHECK(move->added.size() == move->removed.size() + 1);
  const Face& f = g.face(2);
  for (EdgeId e : move->added) CHECK(std::count(f.edges.begin(), f.edges.end(), e) == 1);
  for (EdgeId e : move->removed) CHECK(c.contains_edge(e));
  const CycleState next = move->apply(g, c);
  CHECK(next.length() == 59);
  CHECK(testing::is_simple_cycle(g, next.order()));
  CHECK(next.contains_vertex(2));
  CHECK(next.contains_vertex(4));
  // a second swap on the same face finds nothing
  CHECK_FALSE(face_segment_swap(g, next, 2).has_value());
  CHECK(move->to_json(g)["delta"] == 1);

  ImproveStats stats;
  const CycleState best = improve_until_stable(g, c, 2, &stats);
  CHECK(best.length() == 60);
  CHECK(stats.segment_swaps >= 1);
  CHECK(testing::is_simple_cycle(g, best.order()));

  const FaceId region[] = {2};
  const std::optional<RerouteMove> wide = bounded_local_reroute(g, c, region, 3);
  REQUIRE(wide.has_value());
  CHECK(wide->delta == 2);
  CHECK(wide->apply(g, c).length() == 60);
}

TEST_CASE("hexagon reroute at radius one") {
  const FullereneGraph g = generate_buckyball();
  const Face& hex = g.face(0);
  const CycleState c = optimum(g, {hex.vertex(0), hex.vertex(1), hex.vertex(2)});
  REQUIRE(c.length() == 57);
  const FaceId region[] = {0};
  const std::optional<RerouteMove> move = bounded_local_reroute(g, c, region, 1);
  REQUIRE(move.has_value());
  CHECK(move->kind == MoveKind::bounded_local);
  CHECK(move->delta == 2);
  const CycleState next = move->apply(g, c);
  CHECK(next.length() == 59);
  CHECK(testing::is_simple_cycle(g, next.order()));
  // nothing outside the ball moved
  const std::vector<Vertex> ball = neighborhood(g, region, 1);
  for (EdgeId e : c.edge_list()) {
    auto [a, b] = g.edge(e);
    const bool inside = std::count(ball.begin(), ball.end(), a) && std::count(ball.begin(), ball.end(), b);
    if (!inside) CHECK(next.contains_edge(e));
  }
  CHECK(check_no_white_p3(g, color(g, next)).ok);
}

TEST_CASE("bounded reroute agrees with exhaustive enumeration") {
  const FullereneGraph g = generate_nanotube(1);
  std::mt19937_64 rng(21);
  int improving = 0;
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<Vertex> forbidden{static_cast<Vertex>(rng() % 30), static_cast<Vertex>(rng() % 30),
                                  static_cast<Vertex>(rng() % 30)};
    const CycleState c = optimum(g, forbidden);
    if (c.empty()) continue;
    const FaceId face = static_cast<FaceId>(rng() % g.num_faces());
    const int radius = static_cast<int>(rng() % 3);
    const FaceId region[] = {face};
    const std::vector<Vertex> ball = neighborhood(g, region, radius);
    const int best = oracle_local_best(g, c, ball);
    const std::optional<RerouteMove> move = bounded_local_reroute(g, c, region, radius);
    if (best > c.length()) {
      ++improving;
      REQUIRE(move.has_value());
      CHECK(move->delta == best - c.length());
      CHECK(testing::is_simple_cycle(g, move->apply(g, c).order()));
    } else {
      CHECK_FALSE(move.has_value());
    }
    const std::optional<CycleState> local = best_local_cycle(g, c, region, radius);
    CHECK((local ? local->length() : -1) == best);
  }
  CHECK(improving > 0);
}

TEST_CASE("neighborhoods grow with the radius") {
  const FullereneGraph g = generate_buckyball();
  const FaceId region[] = {5};
  const std::vector<Vertex> zero = neighborhood(g, region, 0);
  std::set<Vertex> boundary(g.face(5).boundary.begin(), g.face(5).boundary.end());
  CHECK(std::set<Vertex>(zero.begin(), zero.end()) == boundary);
  std::size_t previous = zero.size();
  for (int r = 1; r <= 3; ++r) {
    const std::vector<Vertex> ball = neighborhood(g, region, r);
    CHECK(ball.size() > previous);
    previous = ball.size();
  }
}

TEST_CASE("no improvement on a hamiltonian cycle") {
  const FullereneGraph g = generate_nanotube(2);
  const CycleState c = optimum(g, {});
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    CHECK_FALSE(face_segment_swap(g, c, f).has_value());
    const FaceId region[] = {f};
    CHECK_FALSE(bounded_local_reroute(g, c, region, 1).has_value());
  }
  ImproveStats stats;
  CHECK(improve_until_stable(g, c, 2, &stats) == c);
  CHECK(stats.segment_swaps + stats.local_reroutes == 0);
}

TEST_CASE("reroute arguments") {
  const FullereneGraph g = generate_dodecahedron();
  const CycleState c(g, g.face(0).boundary);
  const FaceId region[] = {0};
  CHECK_THROWS_AS(bounded_local_reroute(g, c, region, 4), std::invalid_argument);
  CHECK_THROWS_AS(bounded_local_reroute(g, c, region, -1), std::invalid_argument);
  const CycleState grown = improve_until_stable(g, c, 1);
  CHECK(grown.length() > 5);
  CHECK(testing::is_simple_cycle(g, grown.order()));

  // a move only applies to the cycle it was made for
  const FullereneGraph b = generate_buckyball();
  const CycleState pc = optimum(b, {4, 2});
  const RerouteMove move = *face_segment_swap(b, pc, 2);
  const CycleState h = optimum(b, {});
  CHECK_THROWS_AS(move.apply(b, h), std::invalid_argument);
}
