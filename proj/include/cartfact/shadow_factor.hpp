#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cartfact/graph.hpp"
#include "cartfact/product.hpp"

namespace cartfact {

using ColorId = std::uint32_t;

/// Prime factorization of a connected undirected graph.
///
/// Color j labels the edges of the Z_j-layers. Factor-local ids follow the BFS
/// order of the unit layer, so the root has coordinate 0 in every factor.
struct ShadowFactorization {
  VertexId root = 0;
  std::vector<ColorId> edge_color;  // by edge id of the factored graph
  std::vector<ShadowGraph> factors;
  std::vector<std::vector<VertexId>> layers;  // factor j: local id -> host vertex of the unit layer
  Coordinatization coords;

  std::size_t num_colors() const noexcept { return factors.size(); }
};

/// Classes of the product relation, i.e. the transitive closure of the
/// Djokovic-Winkler relation restricted to a BFS spanning tree together with
/// the "no common chordless square" relation on incident edges. Classes are
/// numbered by the smallest (bfs number, bfs number) pair of their edges.
std::vector<ColorId> product_relation_colors(const ShadowGraph& s, VertexId root);

/// Coordinates read off a product coloring: coordinate i of v is the unique
/// unit-layer vertex of color i in the component of v spanned by the edges of
/// all other colors. Throws Error(kInvalidColoring) if the coloring is not a
/// product coloring.
Coordinatization coordinates_from_colors(const ShadowGraph& s, VertexId root, std::span<const ColorId> colors);

/// Factors and coordinates for a given product coloring, validated edge for edge.
ShadowFactorization factorization_from_colors(const ShadowGraph& s, VertexId root, std::vector<ColorId> colors);

/// Throws Error(kDisconnected) for disconnected input. n = 1 yields zero factors.
ShadowFactorization factor_shadow(const ShadowGraph& s, VertexId root);

/// Factorization of the shadow of a product assembled from factorizations of
/// the shadows of its factors, without touching the product's structure.
/// `product_shadow` must be shadow(product.graph); parts[i] factors shadow(factor i).
ShadowFactorization compose_factorizations(const Product& product, const ShadowGraph& product_shadow,
                                           std::span<const ShadowGraph> part_shadows,
                                           std::span<const ShadowFactorization> parts);

}  // namespace cartfact
