#pragma once

#include <optional>

#include "cartfact/directed_factor.hpp"

namespace cartfact {

/// Factoring of a connected directed graph with loops from the factorization
/// `nf` of its loopless part.
///
/// For each vertex in BFS order, its projections into the unit layers of all
/// current classes are computed. An unlooped vertex must have only unlooped
/// projections and a looped vertex at least one looped projection; otherwise
/// the classes of its down-edges are merged. The BFS order must be rooted at
/// an unlooped vertex (Error(kNoUnloopedVertex) otherwise).
DirectedFactorization factor_with_loops(const DiGraph& g, const ShadowGraph& shadow, const ShadowFactorization& sf,
                                        const BfsOrder& order, const DirectedFactorization& nf);

struct PipelineOptions {
  /// Defaults to the smallest unlooped vertex.
  std::optional<VertexId> root;
};

struct PipelineReport {
  VertexId root = 0;
  std::size_t shadow_factors = 0;
  double shadow_seconds = 0;
  double directed_seconds = 0;
  double loops_seconds = 0;
};

/// shadow -> prime factors of the shadow -> loopless factoring -> loop factoring.
///
/// Throws Error(kDisconnected) for disconnected graphs and
/// Error(kNoUnloopedVertex) when every vertex is looped. The trivial graph
/// yields zero factors.
DirectedFactorization factor_full(const DiGraph& g, const PipelineOptions& options = {}, PipelineReport* report = nullptr);

}  // namespace cartfact
