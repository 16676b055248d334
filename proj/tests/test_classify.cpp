#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "fullerene/classify.hpp"
#include "fullerene/generators.hpp"
#include "fullerene/search.hpp"
#include "support.hpp"

using namespace fullerene;

namespace {

// Independent catalogue count. A face word is fixed by which boundary edges
// are on the cycle: a vertex is white exactly when neither of its boundary
// edges is. Keep words without three consecutive whites and without the
// closed boundary; count them up to rotation and reflection.
std::map<int, std::multiset<int>> oracle_classes() {
  std::map<int, std::multiset<int>> out;  // size -> white counts per class
  for (int k : {5, 6}) {
    std::set<std::vector<int>> seen;
    for (int mask = 0; mask < (1 << k) - 1; ++mask) {
      std::vector<int> bits(k);
      for (int i = 0; i < k; ++i) bits[i] = (mask >> i) & 1;
      // vertex i sits between edge i-1 and edge i
      std::vector<int> white(k);
      for (int i = 0; i < k; ++i) white[i] = !bits[(i + k - 1) % k] && !bits[i];
      bool ok = true;
      for (int i = 0; i < k; ++i) ok &= !(white[i] && white[(i + 1) % k] && white[(i + 2) % k]);
      if (!ok) continue;
      std::vector<int> best;
      for (int r = 0; r < k; ++r) {
        std::vector<int> rot(k), ref(k);
        for (int i = 0; i < k; ++i) {
          rot[i] = bits[(i + r) % k];
          ref[i] = bits[((r - i) % k + k) % k];
        }
        if (best.empty() || rot < best) best = rot;
        if (ref < best) best = ref;
      }
      if (seen.insert(best).second) {
        out[k].insert(std::accumulate(white.begin(), white.end(), 0));
      }
    }
  }
  return out;
}

FullereneGraph relabel(const FullereneGraph& g, const std::vector<Vertex>& perm) {
  Rotation rot(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int i = 0; i < 3; ++i) rot[perm[v]][i] = perm[g.neighbors(v)[i]];
  }
  return FullereneGraph(std::move(rot));
}

CycleState optimum(const FullereneGraph& g, const std::vector<Vertex>& forbidden) {
  const SearchResult r = longest_cycle_exact(g, forbidden);
  REQUIRE(r.optimal);
  return r.cycle;
}

}  // namespace

TEST_CASE("catalogue matches the independent enumeration") {
  const std::vector<PatternClass>& cat = pattern_catalogue();
  CHECK(cat.size() == 14);
  std::map<int, std::multiset<int>> mine;
  for (const PatternClass& p : cat) mine[p.size].insert(p.whites);
  CHECK(mine == oracle_classes());
  CHECK(mine[5].size() == 5);
  CHECK(mine[6].size() == 9);
  CHECK(enumerate_patterns(true).size() == 16);
  CHECK(enumerate_patterns() == enumerate_patterns());
  for (const PatternClass& p : cat) {
    CHECK(p.word == canonical_word(p.word));
    CHECK(p.white_pentagon == (p.size == 5 && p.whites >= 2));
    CHECK(p.whites <= 2);
  }
}

TEST_CASE("canonical word ignores rotation and reflection") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 5 + static_cast<int>(rng() % 2);
    PatternWord w(k);
    for (int& s : w) s = static_cast<int>(rng() % 4);
    const PatternWord c = canonical_word(w);
    PatternWord rotated(w.begin() + 1, w.end());
    rotated.push_back(w.front());
    CHECK(canonical_word(rotated) == c);
    CHECK(c <= w);
  }
}

TEST_CASE("hamiltonian cycle colors everything black") {
  const FullereneGraph g = generate_buckyball();
  const CycleState c = optimum(g, {});
  const FaceColoring col = color(g, c);
  CHECK(col.white_count == 0);
  for (FaceClass fc : col.face_class) CHECK(fc == FaceClass::black);
  CHECK(check_no_white_p3(g, col).ok);
  CHECK(check_no_white_pentagon(g, col).ok);
  CHECK(check_max_two_whites_per_face(g, col).ok);
  for (const Face& f : g.faces()) {
    const TraversalPattern p = classify_pattern(g, f.id, col, c);
    CHECK(p.canonical_id >= 0);
    CHECK(p.lemma_consistent);
  }
}

TEST_CASE("two adjacent whites on a pentagon") {
  // buckyball pentagon 2 with two of its vertices removed
  const FullereneGraph g = generate_buckyball();
  const CycleState c = optimum(g, {4, 2});
  CHECK(c.length() == 58);
  const FaceColoring col = color(g, c);
  CHECK(col.face_class[2] == FaceClass::white);
  CHECK(check_no_white_p3(g, col).ok);
  const LemmaCheck pent = check_no_white_pentagon(g, col);
  CHECK_FALSE(pent.ok);
  REQUIRE(pent.face.has_value());
  CHECK(*pent.face == 2);
  CHECK(std::set<Vertex>(pent.witness.begin(), pent.witness.end()) == std::set<Vertex>{2, 4});
  const TraversalPattern p = classify_pattern(g, 2, col, c);
  REQUIRE(p.canonical_id >= 0);
  CHECK(pattern_catalogue()[p.canonical_id].white_pentagon);
  CHECK_FALSE(p.lemma_consistent);
}

TEST_CASE("white path on a hexagon") {
  const FullereneGraph g = generate_buckyball();
  const Face& hex = g.face(0);
  REQUIRE(hex.size() == 6);
  const CycleState c = optimum(g, {hex.vertex(0), hex.vertex(1), hex.vertex(2)});
  CHECK(c.length() == 57);
  const FaceColoring col = color(g, c);
  CHECK(col.white_count == 3);
  const LemmaCheck p3 = check_no_white_p3(g, col);
  CHECK_FALSE(p3.ok);
  CHECK(p3.witness == std::vector<Vertex>{0, 1, 10});
  CHECK(p3.describe() == "violation, vertices 0 1 10");
  CHECK(col.face_class[0] == FaceClass::overfull);
  const LemmaCheck two = check_max_two_whites_per_face(g, col);
  CHECK_FALSE(two.ok);
  CHECK(*two.face == 0);
  const TraversalPattern p = classify_pattern(g, 0, col, c);
  CHECK(p.canonical_id == -1);
  CHECK_FALSE(p.lemma_consistent);
}

TEST_CASE("patterns do not depend on labels") {
  std::mt19937_64 rng(5);
  const FullereneGraph g = generate_nanotube(2);
  const CycleState c = optimum(g, {5, 17, 33});
  const FaceColoring col = color(g, c);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const FullereneGraph h = relabel(g, perm);
    std::vector<Vertex> order;
    for (Vertex v : c.order()) order.push_back(perm[v]);
    const CycleState hc(h, order);
    const FaceColoring hcol = color(h, hc);
    for (const Face& f : g.faces()) {
      std::set<Vertex> image;
      for (Vertex v : f.boundary) image.insert(perm[v]);
      const auto match = std::find_if(h.faces().begin(), h.faces().end(), [&](const Face& x) {
        return std::set<Vertex>(x.boundary.begin(), x.boundary.end()) == image;
      });
      REQUIRE(match != h.faces().end());
      const TraversalPattern a = classify_pattern(g, f.id, col, c);
      const TraversalPattern b = classify_pattern(h, match->id, hcol, hc);
      CHECK(a.canonical == b.canonical);
      CHECK(a.canonical_id == b.canonical_id);
      CHECK(hcol.face_whites[match->id] == col.face_whites[f.id]);
    }
  }
}

TEST_CASE("face classes follow white counts") {
  const FullereneGraph g = generate_nanotube(1);
  const CycleState c = optimum(g, {0, 5});
  CHECK(c.length() == 28);
  const FaceColoring col = color(g, c);
  CHECK(col.white_count == 2);
  for (const Face& f : g.faces()) {
    int whites = 0;
    for (Vertex v : f.boundary) whites += col.is_white(v);
    CHECK(col.face_whites[f.id] == whites);
    const FaceClass expected = whites == 0   ? FaceClass::black
                               : whites == 1 ? FaceClass::single
                               : whites == 2 ? FaceClass::white
                                             : FaceClass::overfull;
    CHECK(col.face_class[f.id] == expected);
  }
  CHECK(std::string(to_string(FaceClass::white)) == "white");
}
