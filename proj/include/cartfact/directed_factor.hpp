#pragma once

#include <cstddef>
#include <vector>

#include "cartfact/color_partition.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/product.hpp"
#include "cartfact/shadow_factor.hpp"

namespace cartfact {

/// Prime factors of a directed graph together with the partition of the
/// shadow's prime factor colors that produced them.
struct DirectedFactorization {
  ColorPartition partition;
  std::vector<DiGraph> factors;                       // unit layers of the final classes
  std::vector<std::vector<ColorId>> factor_colors;    // shadow colors behind each factor, sorted
  std::vector<std::vector<VertexId>> factor_layers;   // factor i: local id -> host vertex
  Coordinatization coords;                            // host graph over `factors`
  std::size_t directed_merges = 0;
  std::size_t loop_merges = 0;
};

/// Factoring of a connected loopless directed graph from the prime
/// factorization of its shadow.
///
/// Vertices are scanned in BFS order; every down- and cross-edge is compared
/// with its projection into the unit layer of its current class. The first
/// inconsistently directed pair at a vertex merges that class with the classes
/// of all down-edges of the vertex, and the scan moves on to the next vertex.
///
/// `shadow` must be shadow(g), `sf` a prime factorization of it and `order` a
/// BFS order rooted at sf.root. Throws Error(kInvalidArgument) if g has loops
/// and Error(kMismatch) if the inputs do not fit together.
DirectedFactorization factor_directed(const DiGraph& g, const ShadowGraph& shadow, const ShadowFactorization& sf,
                                      const BfsOrder& order);

/// Number of down- and cross-edges that are inconsistently directed with their
/// projection into the unit layer of their class under `partition`. Zero for
/// every partition produced by factor_directed.
std::size_t count_inconsistent_edges(const ShadowGraph& shadow, const ShadowFactorization& sf, const BfsOrder& order,
                                     const ColorPartition& partition);

/// Factors as the unit layers of the classes of `partition`, ordered by their
/// smallest color; loops are copied from g.
DirectedFactorization assemble_factorization(const DiGraph& g, const ShadowFactorization& sf, ColorPartition partition);

}  // namespace cartfact
