#include "fullerene/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fullerene/validate.hpp"

namespace fullerene {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Orders each vertex's neighbors clockwise as seen from outside the surface
// (looking along -normal), starting from the smallest neighbor id.
Rotation rotation_from_geometry(const std::vector<std::vector<Vertex>>& adjacency,
                                const std::vector<Vec3>& position,
                                const std::vector<Vec3>& normal) {
  const int n = static_cast<int>(adjacency.size());
  Rotation rotation(n);
  for (Vertex v = 0; v < n; ++v) {
    if (adjacency[v].size() != 3) throw std::logic_error("generator produced a non-cubic vertex");
    const Vec3& nv = normal[v];
    Vec3 t1 = cross(nv, std::fabs(nv[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0});
    const Vec3 t2 = cross(nv, t1);
    // t1 x t2 points along nv, so atan2 grows counterclockwise from outside.
    std::array<std::pair<double, Vertex>, 3> by_angle;
    for (int i = 0; i < 3; ++i) {
      const Vec3 d = sub(position[adjacency[v][i]], position[v]);
      by_angle[i] = {std::atan2(dot(d, t2), dot(d, t1)), adjacency[v][i]};
    }
    std::sort(by_angle.begin(), by_angle.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::array<Vertex, 3> order{by_angle[0].second, by_angle[1].second, by_angle[2].second};
    const auto first = std::min_element(order.begin(), order.end());
    std::rotate(order.begin(), first, order.end());
    rotation[v] = order;
  }
  return rotation;
}

FullereneGraph checked(Rotation rotation) {
  FullereneGraph g(std::move(rotation));
  const ValidationReport report = validate_fullerene(g);
  if (!report.ok()) throw std::logic_error("generator output invalid: " + report.failures());
  return g;
}

}  // namespace

FullereneGraph generate_nanotube(int rings) {
  if (rings < 0) throw std::invalid_argument("nanotube ring count must be >= 0");
  constexpr int kWidth = 5;
  // Level 0 is the top pentagon, level `last` the bottom one. Levels
  // 1..last-1 pair up into zigzag belts (2j-1, 2j); belts are joined to each
  // other and to the caps by vertical edges.
  const int belts = rings + 1;
  const int last = 2 * belts + 1;
  const int n = kWidth * (last + 1);
  auto id = [](int level, int i) { return level * kWidth + ((i % kWidth) + kWidth) % kWidth; };

  std::vector<std::vector<Vertex>> adjacency(n);
  auto link = [&](Vertex a, Vertex b) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  };
  for (int i = 0; i < kWidth; ++i) {
    link(id(0, i), id(0, i + 1));
    link(id(last, i), id(last, i + 1));
  }
  for (int level = 0; level < last; ++level) {
    for (int i = 0; i < kWidth; ++i) {
      if (level % 2 == 0) {
        link(id(level, i), id(level + 1, i));
      } else {
        // Upper belt vertex i meets lower belt vertices i and i - 1.
        link(id(level, i), id(level + 1, i));
        link(id(level, i), id(level + 1, i - 1));
      }
    }
  }

  std::vector<Vec3> position(n), normal(n);
  const double step = std::numbers::pi / kWidth;
  for (int level = 0; level <= last; ++level) {
    for (int i = 0; i < kWidth; ++i) {
      // Lower belt vertices sit half a step after their upper neighbors;
      // vertical edges keep the angle.
      const double theta = (2 * i + level / 2) * step;
      const Vertex v = id(level, i);
      position[v] = {std::cos(theta), std::sin(theta), -static_cast<double>(level)};
      normal[v] = {std::cos(theta), std::sin(theta), 0.0};
    }
  }
  return checked(rotation_from_geometry(adjacency, position, normal));
}

FullereneGraph generate_buckyball() {
  // Icosahedron (0, +-1, +-phi) and cyclic permutations; edges have length 2.
  const double phi = std::numbers::phi;
  std::vector<Vec3> ico;
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      ico.push_back({0.0, s1 * 1.0, s2 * phi});
      ico.push_back({s1 * 1.0, s2 * phi, 0.0});
      ico.push_back({s2 * phi, 0.0, s1 * 1.0});
    }
  }
  const int m = static_cast<int>(ico.size());
  auto ico_adjacent = [&](int a, int b) {
    const Vec3 d = sub(ico[a], ico[b]);
    return a != b && std::fabs(dot(d, d) - 4.0) < 1e-9;
  };
  // One C60 vertex per directed icosahedron edge (p, q): the point one third
  // of the way from p to q.
  std::vector<std::pair<int, int>> darts;
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (ico_adjacent(p, q)) darts.emplace_back(p, q);
    }
  }
  const int n = static_cast<int>(darts.size());
  auto index = [&](int p, int q) {
    return static_cast<Vertex>(
        std::find(darts.begin(), darts.end(), std::make_pair(p, q)) - darts.begin());
  };
  std::vector<std::vector<Vertex>> adjacency(n);
  std::vector<Vec3> position(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto [p, q] = darts[v];
    adjacency[v].push_back(index(q, p));
    for (int r = 0; r < m; ++r) {
      if (r != q && ico_adjacent(p, r) && ico_adjacent(q, r)) adjacency[v].push_back(index(p, r));
    }
    for (int c = 0; c < 3; ++c) position[v][c] = (2.0 * ico[p][c] + ico[q][c]) / 3.0;
  }
  return checked(rotation_from_geometry(adjacency, position, position));
}

}  // namespace fullerene
