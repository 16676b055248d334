#include "fullerene/io.hpp"

#include <fstream>
#include <iterator>

#include "fullerene/validate.hpp"

namespace fullerene {

std::vector<FullereneGraph> parse_planar_code(std::span<const std::uint8_t> bytes, bool validate) {
  const std::size_t header = kPlanarCodeHeader.size();
  if (bytes.size() < header ||
      !std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin())) {
    throw ParseError(0, "missing >>planar_code<< header");
  }
  std::vector<FullereneGraph> graphs;
  std::size_t pos = header;
  while (pos < bytes.size()) {
    const std::size_t graph_start = pos;
    const int n = bytes[pos++];
    if (n == 0) throw ParseError(graph_start, "graph with zero vertices");
    Rotation rotation(n);
    for (int v = 0; v < n; ++v) {
      int count = 0;
      while (true) {
        if (pos >= bytes.size()) {
          throw ParseError(pos, "truncated stream in neighbor list of vertex " +
                                    std::to_string(v + 1));
        }
        const int value = bytes[pos];
        if (value == 0) {
          ++pos;
          break;
        }
        if (value > n) {
          throw ParseError(pos, "neighbor index " + std::to_string(value) + " exceeds n = " +
                                    std::to_string(n));
        }
        if (count == 3) {
          throw ParseError(pos, "vertex " + std::to_string(v + 1) +
                                    " has more than 3 neighbors (missing 0 terminator?)");
        }
        rotation[v][count++] = value - 1;
        ++pos;
      }
      if (count != 3) {
        throw ParseError(pos - 1, "vertex " + std::to_string(v + 1) + " has " +
                                      std::to_string(count) + " neighbors, expected 3");
      }
    }
    try {
      FullereneGraph g(std::move(rotation));
      if (validate) {
        const ValidationReport report = validate_fullerene(g);
        if (!report.ok()) throw ParseError(graph_start, "not a fullerene: " + report.failures());
      }
      graphs.push_back(std::move(g));
    } catch (const EmbeddingError& e) {
      throw ParseError(graph_start, std::string("invalid rotation system: ") + e.what());
    }
  }
  return graphs;
}

std::vector<std::uint8_t> encode_planar_code(std::span<const FullereneGraph> graphs) {
  std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const FullereneGraph& g : graphs) {
    if (g.n() > 255) {
      throw std::invalid_argument("planar_code supports n <= 255; use the JSON format");
    }
    out.push_back(static_cast<std::uint8_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
      for (Vertex u : g.neighbors(v)) out.push_back(static_cast<std::uint8_t>(u + 1));
      out.push_back(0);
    }
  }
  return out;
}

nlohmann::json to_json(const FullereneGraph& g) {
  nlohmann::json rotation = nlohmann::json::array();
  for (const auto& nb : g.rotation()) rotation.push_back({nb[0], nb[1], nb[2]});
  return {{"n", g.n()}, {"rotation", std::move(rotation)}};
}

FullereneGraph graph_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("rotation");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("rotation must be an array of n neighbor lists");
  }
  Rotation rotation(n);
  for (int v = 0; v < n; ++v) {
    const auto& row = rows[v];
    if (!row.is_array() || row.size() != 3) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " needs exactly 3 neighbors");
    }
    for (int i = 0; i < 3; ++i) rotation[v][i] = row[i].get<int>();
  }
  return FullereneGraph(std::move(rotation));
}

std::vector<FullereneGraph> parse_json_graphs(const std::string& text, bool validate) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<FullereneGraph> graphs;
  auto add = [&](const nlohmann::json& j) {
    FullereneGraph g = graph_from_json(j);
    const ValidationReport report = validate ? validate_fullerene(g) : ValidationReport{};
    if (!report.ok()) {
      throw std::invalid_argument("graph " + std::to_string(graphs.size()) +
                                  " is not a fullerene: " + report.failures());
    }
    graphs.push_back(std::move(g));
  };
  if (doc.is_array()) {
    for (const auto& j : doc) add(j);
  } else {
    add(doc);
  }
  return graphs;
}

std::string encode_json_graphs(std::span<const FullereneGraph> graphs) {
  if (graphs.size() == 1) return to_json(graphs.front()).dump() + "\n";
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& g : graphs) doc.push_back(to_json(g));
  return doc.dump() + "\n";
}

std::vector<FullereneGraph> read_graph_file(const std::string& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  if (bytes.size() >= kPlanarCodeHeader.size() &&
      std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin())) {
    return parse_planar_code(bytes, validate);
  }
  try {
    return parse_json_graphs(std::string(bytes.begin(), bytes.end()), validate);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("neither planar_code nor JSON: ") + e.what());
  }
}

}  // namespace fullerene
