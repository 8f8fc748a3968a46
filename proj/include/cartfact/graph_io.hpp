#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartfact/graph.hpp"

namespace cartfact {

using CoordVector = std::vector<std::uint32_t>;

struct ColoredEdge {
  VertexId u;
  VertexId v;
  std::uint32_t color;
};

/// Everything a graph file may carry: the graph itself plus the optional
/// coordinate table (`c` lines) and edge coloring (`e` lines).
struct GraphDocument {
  DiGraph graph;
  /// Indexed by vertex; empty when the file has no `c` lines.
  std::vector<CoordVector> coordinates;
  std::vector<ColoredEdge> colors;
};

/// Line-oriented format:
///   # comment
///   n <N>        vertex count, must precede everything else
///   a <u> <v>    arc u -> v
///   l <v>        loop at v
///   c <v> <c_1> ... <c_k>
///   e <u> <v> <color>
/// Errors carry the offending line number.
GraphDocument parse_graph_document(std::string_view text);
DiGraph parse_graph(std::string_view text);

/// Canonical form: `n`, then sorted `a` lines, then sorted `l` lines.
std::string serialize_graph(const DiGraph& g);
/// `c` lines in vertex order.
std::string serialize_coordinates(const std::vector<CoordVector>& table);
std::string serialize_colors(const std::vector<ColoredEdge>& colors);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace cartfact
