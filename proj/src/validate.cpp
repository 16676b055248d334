#include "fullerene/validate.hpp"

#include <algorithm>
#include <numeric>

namespace fullerene {

namespace {

// Connectivity of g minus the vertices flagged in `removed`.
bool connected_without(const FullereneGraph& g, const std::vector<char>& removed) {
  const int n = g.n();
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!removed[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == alive;
}

ValidationCheck make(std::string name, bool ok, std::string detail = {}) {
  return ValidationCheck{std::move(name), ok, std::move(detail)};
}

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.ok; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.ok) continue;
    if (!out.empty()) out += "; ";
    out += c.name + ": " + c.detail;
  }
  return out;
}

bool is_three_connected(const FullereneGraph& g) {
  const int n = g.n();
  if (n < 4) return false;
  std::vector<char> removed(n, 0);
  if (!connected_without(g, removed)) return false;
  for (Vertex a = 0; a < n; ++a) {
    removed[a] = 1;
    if (!connected_without(g, removed)) return false;
    for (Vertex b = a + 1; b < n; ++b) {
      removed[b] = 1;
      const bool ok = connected_without(g, removed);
      removed[b] = 0;
      if (!ok) return false;
    }
    removed[a] = 0;
  }
  return true;
}

ValidationReport validate_fullerene(const FullereneGraph& g) {
  ValidationReport report;
  const int n = g.n();
  const int f = g.num_faces();

  report.checks.push_back(make("vertex_count", n >= 20 && n % 2 == 0,
                               "n = " + std::to_string(n) + " (need even n >= 20)"));

  // The constructor already enforces these; re-checked so the report is
  // self-contained.
  bool simple = true;
  try {
    check_rotation(g.rotation());
  } catch (const EmbeddingError&) {
    simple = false;
  }
  report.checks.push_back(make("cubic_simple", simple && g.num_edges() * 2 == 3 * n,
                               std::to_string(g.num_edges()) + " edges"));

  int dart_total = 0;
  for (const Face& face : g.faces()) dart_total += face.size();
  report.checks.push_back(make("darts_partitioned", dart_total == 3 * n,
                               "sum of face sizes " + std::to_string(dart_total) + ", expected " +
                                   std::to_string(3 * n)));

  std::string self_adjacent;
  for (const Face& face : g.faces()) {
    for (FaceId other : face.neighbors) {
      if (other == face.id) {
        self_adjacent = "face " + std::to_string(face.id) + " lies on both sides of an edge";
        break;
      }
    }
    if (!self_adjacent.empty()) break;
  }
  report.checks.push_back(make("faces_distinct_across", self_adjacent.empty(), self_adjacent));

  std::string bad_size;
  for (const Face& face : g.faces()) {
    if (face.size() != 5 && face.size() != 6) {
      bad_size = "face " + std::to_string(face.id) + " has size " + std::to_string(face.size());
      break;
    }
  }
  report.checks.push_back(make("face_sizes", bad_size.empty(), bad_size));

  const int pentagons = g.count_faces_of_size(5);
  report.checks.push_back(
      make("pentagon_count", pentagons == 12, std::to_string(pentagons) + " pentagons"));

  report.checks.push_back(make("euler", 2 * f == n + 4,
                               "f = " + std::to_string(f) + ", n/2 + 2 = " +
                                   std::to_string(n / 2 + 2)));

  const bool three = is_three_connected(g);
  report.checks.push_back(
      make("three_connected", three, three ? "" : "vertex cut of size <= 2 found"));
  return report;
}

}  // namespace fullerene
