#include <algorithm>
#include <map>
#include <optional>

#include "doctest.h"
#include "fullerene/classify.hpp"
#include "fullerene/discharge.hpp"
#include "fullerene/generators.hpp"
#include "fullerene/search.hpp"

using namespace fullerene;

namespace {

struct Run {
  CycleState c;
  FaceColoring col;
  ChargeLedger ledger;
};

Run discharge(const FullereneGraph& g, const std::vector<Vertex>& order) {
  Run r{CycleState(g, order), {}, {}};
  r.col = color(g, r.c);
  r.ledger = apply_rules(g, r.c, r.col, initial_charges(g, r.c, r.col));
  return r;
}

int whites_on(const FullereneGraph& g, const CycleState& c, FaceId f) {
  int w = 0;
  for (Vertex v : g.face(f).boundary) w += !c.contains_vertex(v);
  return w;
}

// Recomputes the expected transfers straight from the definitions.
std::vector<std::tuple<char, FaceId, FaceId, int>> expected_transfers(const FullereneGraph& g,
                                                                      const CycleState& c) {
  std::vector<std::tuple<char, FaceId, FaceId, int>> out;
  for (const Face& h : g.faces()) {
    if (h.size() != 6 || whites_on(g, c, h.id) != 0) continue;
    for (int i = 0; i < 6; ++i) {
      if (whites_on(g, c, h.across(i)) != 2) continue;
      const bool prev = c.contains_edge(h.edge(i + 5));
      const bool mid = c.contains_edge(h.edge(i));
      const bool next = c.contains_edge(h.edge(i + 1));
      if (prev && mid && next) out.emplace_back('A', h.across(i), h.id, i);
      if (mid && !prev && !next) out.emplace_back('B', h.across(i), h.id, i);
    }
  }
  return out;
}

std::vector<std::tuple<char, FaceId, FaceId, int>> logged(const ChargeLedger& ledger) {
  std::vector<std::tuple<char, FaceId, FaceId, int>> out;
  for (const Transfer& t : ledger.rule_log) {
    out.emplace_back(t.rule == Rule::A ? 'A' : 'B', t.donor, t.receiver, t.edge_index);
    CHECK(t.amount == (t.rule == Rule::A ? 1 : 2));
  }
  return out;
}

}  // namespace

TEST_CASE("theorem bound arithmetic") {
  CHECK(theorem_bound(20) == 16);
  CHECK(theorem_bound(30) == 25);
  CHECK(theorem_bound(40) == 33);
  CHECK(theorem_bound(50) == 41);
  CHECK(theorem_bound(60) == 50);
  for (int n = 20; n <= 1000; n += 2) {
    // ceil(5n/6 - 2/3) = ceil((5n - 4) / 6) in exact integers
    const int exact = (5 * n - 4 + 5) / 6;
    CHECK(theorem_bound(n) == exact);
    // and n - floor(f/3) with f = n/2 + 2
    CHECK(theorem_bound(n) == n - (n / 2 + 2) / 3);
  }
}

TEST_CASE("hamiltonian cycle carries no charge") {
  const FullereneGraph g = generate_dodecahedron();
  const SearchResult r = longest_cycle_exact(g, {});
  const Run run = discharge(g, r.cycle.order());
  CHECK(run.ledger.total() == 0);
  CHECK(run.ledger.rule_log.empty());
  const AuditReport audit = audit_final(g, run.c, run.col, run.ledger, true);
  CHECK(audit.passed());
  const BoundReport bound = derive_bound(g, audit);
  CHECK(bound.bound == 16);
  CHECK(bound.capacity == 24);
  CHECK(bound.max_white == 4);
  CHECK(bound.satisfied);
  CHECK(bound.to_json()["bound"] == 16);
}

TEST_CASE("initial charges") {
  const FullereneGraph g = generate_nanotube(1);
  const SearchResult r = longest_cycle_exact(g, {0, 5});
  const CycleState& c = r.cycle;
  const FaceColoring col = color(g, c);
  const ChargeLedger initial = initial_charges(g, c, col);
  CHECK(initial.total() == 6 * col.white_count);
  CHECK(initial.total_initial == 12);
  for (const Face& f : g.faces()) CHECK(initial.face_charge[f.id] == 2 * whites_on(g, c, f.id));
}

TEST_CASE("rule log matches the definitions on every cycle of C30") {
  const FullereneGraph g = generate_nanotube(1);
  int with_a = 0;
  int with_b = 0;
  long long cycles = 0;
  for_each_cycle(g, {}, [&](const std::vector<Vertex>& order) {
    if (order.size() < 5) return true;
    ++cycles;
    const Run run = discharge(g, order);
    auto want = expected_transfers(g, run.c);
    auto got = logged(run.ledger);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    REQUIRE(want == got);
    for (const auto& t : got) (std::get<0>(t) == 'A' ? with_a : with_b)++;
    REQUIRE(run.ledger.total() == 6 * run.col.white_count);
    return true;
  });
  CHECK(cycles == 25489);
  CHECK(with_a > 0);
  CHECK(with_b > 0);
}

TEST_CASE("rule B twice overloads a black hexagon") {
  const FullereneGraph g = generate_nanotube(2);
  std::optional<std::vector<Vertex>> found;
  FaceId receiver = -1;
  for_each_cycle(g, {}, [&](const std::vector<Vertex>& order) {
    if (order.size() < 5) return true;
    const Run run = discharge(g, order);
    std::map<FaceId, int> b_count;
    for (const Transfer& t : run.ledger.rule_log) b_count[t.receiver] += t.rule == Rule::B ? 1 : 10;
    for (auto [face, count] : b_count) {
      if (count == 2) {
        found = order;
        receiver = face;
        return false;
      }
    }
    return true;
  });
  REQUIRE(found.has_value());
  const Run run = discharge(g, *found);
  CHECK(run.ledger.face_charge[receiver] == 4);

  const AuditReport loose = audit_final(g, run.c, run.col, run.ledger, false);
  CHECK(loose.passed());
  CHECK(loose.conserved);
  CHECK(std::count(loose.over_one_unit.begin(), loose.over_one_unit.end(), receiver) == 1);
  CHECK(loose.max_charge >= 4);
  CHECK_THROWS_AS(derive_bound(g, loose), BoundRefused);

  // asserting the cycle is longest must expose the overload
  const AuditReport strict = audit_final(g, run.c, run.col, run.ledger, true);
  CHECK_FALSE(strict.passed());
  const auto v = std::find_if(strict.violations.begin(), strict.violations.end(),
                              [&](const AuditViolation& x) { return x.face == receiver; });
  REQUIRE(v != strict.violations.end());
  CHECK(v->kind == "face_over_one_unit");
  CHECK(v->charge == 4);
  CHECK(v->region.front() == receiver);
  CHECK(v->region.size() == 7);
  CHECK_THROWS_AS(derive_bound(g, strict), BoundRefused);
}

TEST_CASE("longest cycles under constraints still conserve charge") {
  const FullereneGraph g = generate_buckyball();
  const Face& hex = g.face(0);
  const SearchResult r = longest_cycle_exact(g, {hex.vertex(0), hex.vertex(1), hex.vertex(2)});
  const Run run = discharge(g, r.cycle.order());
  const AuditReport audit = audit_final(g, run.c, run.col, run.ledger, false);
  CHECK(audit.conserved);
  CHECK(audit.pentagons_untouched);
  CHECK(audit.expected_total == 18);
  const auto j = audit.to_json();
  CHECK(j["final_total_halfunits"] == 18);
  CHECK(j["passed"] == true);
}
