#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cartfact/directed_factor.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/graph_io.hpp"

namespace cartfact {

/// Size bounds of the exhaustive checks: 2^max_edges colorings for primality,
/// backtracking over at most max_vertices vertices for isomorphism.
struct OracleLimits {
  std::size_t max_edges = 16;
  std::size_t max_vertices = 10;
};

/// True iff the product of `factors`, mapped through the coordinate table
/// (one row per vertex of g), has exactly the arcs and loops of g.
/// Throws Error(kInvalidArgument) if the table is not a bijection onto the grid.
bool reconstruct_check(const DiGraph& g, std::span<const DiGraph> factors, const std::vector<CoordVector>& table);
bool reconstruct_check(const DiGraph& g, const DirectedFactorization& f);

/// Exhaustive search over all two-colorings of the shadow edges for a
/// witness G = A x B with |A|, |B| >= 2 (grid structure, matching arc
/// directions across parallel layers, product loop rule).
/// The trivial graph is a unit and reported as not prime. Throws
/// Error(kBoundExceeded) above limits.max_edges, Error(kDisconnected) and
/// Error(kNoUnloopedVertex) outside the domain of primality.
bool brute_force_prime(const DiGraph& g, const OracleLimits& limits = {});

/// Backtracking isomorphism test preserving arcs and loops.
/// Throws Error(kBoundExceeded) above limits.max_vertices.
bool iso_check(const DiGraph& g, const DiGraph& h, const OracleLimits& limits = {});

/// True iff the factors can be paired off into isomorphic pairs.
bool isomorphic_multisets(std::span<const DiGraph> a, std::span<const DiGraph> b, const OracleLimits& limits = {});

struct GeneratorParams {
  std::size_t num_factors = 2;
  std::size_t min_size = 2;
  std::size_t max_size = 4;
  double loop_probability = 0.0;
  /// Chance of each non-tree vertex pair becoming an edge.
  double edge_probability = 0.4;
  std::uint64_t seed = 0;
  OracleLimits limits;
};

struct ProductInstance {
  DiGraph graph;                   // scrambled product
  std::vector<DiGraph> factors;    // ground truth, each prime
  std::vector<VertexId> relabeling;  // row-major product vertex -> vertex of graph
};

/// Random connected prime directed factor with at least one unlooped vertex.
DiGraph random_prime_factor(std::mt19937_64& rng, std::size_t size, double edge_probability, double loop_probability,
                            const OracleLimits& limits = {});

/// Deterministic in `params`.
ProductInstance gen_product_instance(const GeneratorParams& params);

/// Uniformly random permutation of 0..n-1 drawn from rng.
std::vector<VertexId> random_permutation(std::mt19937_64& rng, std::size_t n);

}  // namespace cartfact
