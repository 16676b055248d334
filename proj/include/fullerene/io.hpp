#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fullerene/graph.hpp"

namespace fullerene {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Decodes a planar_code stream: header, then per graph one byte n and, for
/// each vertex, its 1-based neighbors in clockwise order closed by a 0 byte.
/// Unless `validate` is false every decoded graph must validate as a
/// fullerene; the rotation must always be a consistent embedding.
std::vector<FullereneGraph> parse_planar_code(std::span<const std::uint8_t> bytes,
                                              bool validate = true);

/// Inverse of parse_planar_code. Throws std::invalid_argument for n > 255.
std::vector<std::uint8_t> encode_planar_code(std::span<const FullereneGraph> graphs);

/// Debug format: {"n": 20, "rotation": [[1, 4, 5], ...]}, 0-based.
nlohmann::json to_json(const FullereneGraph& g);
FullereneGraph graph_from_json(const nlohmann::json& j);

/// Accepts one graph object or an array of them.
std::vector<FullereneGraph> parse_json_graphs(const std::string& text, bool validate = true);
std::string encode_json_graphs(std::span<const FullereneGraph> graphs);

/// Sniffs the header and dispatches to the planar_code or JSON reader.
std::vector<FullereneGraph> read_graph_file(const std::string& path, bool validate = true);

}  // namespace fullerene
