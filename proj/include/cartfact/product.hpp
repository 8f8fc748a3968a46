#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cartfact/graph.hpp"
#include "cartfact/graph_io.hpp"

namespace cartfact {

/// Bijection between the vertices of a host graph and the full grid of
/// coordinate vectors over a list of factors, plus a designated root.
///
/// Codes are mixed-radix with the first factor most significant, so the code
/// of a vertex is its id in the row-major product.
class Coordinatization {
 public:
  Coordinatization() = default;

  /// `table` holds num_vertices rows of radices.size() coordinates each.
  /// Throws Error(kInvalidArgument) unless the table is a bijection onto the grid.
  Coordinatization(std::vector<std::uint32_t> radices, std::vector<std::uint32_t> table, VertexId root);

  /// Identity coordinatization of the row-major product with the given radices.
  static Coordinatization row_major(std::vector<std::uint32_t> radices, VertexId root = 0);

  std::size_t num_factors() const noexcept { return radices_.size(); }
  std::size_t num_vertices() const noexcept { return vertex_at_code_.size(); }
  std::span<const std::uint32_t> radices() const noexcept { return radices_; }
  std::uint64_t stride(std::size_t factor) const noexcept { return strides_[factor]; }
  VertexId root() const noexcept { return root_; }

  std::span<const std::uint32_t> coords(VertexId v) const noexcept {
    return std::span<const std::uint32_t>(table_).subspan(std::size_t{v} * radices_.size(), radices_.size());
  }
  std::uint32_t coord(VertexId v, std::size_t factor) const noexcept {
    return table_[std::size_t{v} * radices_.size() + factor];
  }
  std::uint64_t code_of(VertexId v) const noexcept { return code_of_[v]; }
  VertexId vertex_at_code(std::uint64_t code) const noexcept { return vertex_at_code_[code]; }

  std::uint64_t code(std::span<const std::uint32_t> c) const noexcept;
  /// Throws Error(kOutOfRange) if c is not on the grid.
  VertexId vertex_at(std::span<const std::uint32_t> c) const;

  std::vector<CoordVector> table() const;

 private:
  std::vector<std::uint32_t> radices_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint64_t> code_of_;
  std::vector<VertexId> vertex_at_code_;
  VertexId root_ = 0;
};

struct Product {
  DiGraph graph;
  Coordinatization coords;  // row-major, root = vertex 0
};

/// Cartesian product with the loop rule: a vertex is looped iff at least one
/// of its coordinates is looped in its factor.
Product cartesian_product(std::span<const DiGraph> factors);

/// Replaces every position outside `keep` by the root's coordinate.
CoordVector project_vertex(std::span<const std::uint32_t> v, std::span<const std::size_t> keep,
                           std::span<const std::uint32_t> root);

/// True iff (v,u) and (v2,u2) carry the same arcs under the alignment v<->v2, u<->u2.
/// Throws Error(kInvalidArgument) if either pair is not a shadow edge.
bool consistent_direction(const DiGraph& g, VertexId v, VertexId u, VertexId v2, VertexId u2);

struct Layer {
  DiGraph graph;
  std::vector<VertexId> embedding;  // layer-local id -> host vertex, increasing
};

/// Subgraph induced on the vertices that agree with the root outside `positions`.
/// Arcs and loops are copied from g.
Layer unit_layer(const DiGraph& g, const Coordinatization& coords, std::span<const std::size_t> positions);

/// The vertex x closing the chordless square v-u-x-w whose opposite edges share
/// colors. `colors` is indexed by edge id of s. Throws Error(kInvalidColoring)
/// if no such x exists or if it is not unique.
VertexId product_square(const ShadowGraph& s, std::span<const std::uint32_t> colors, VertexId v, VertexId u, VertexId w);

}  // namespace cartfact
