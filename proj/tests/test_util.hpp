#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cartfact/graph.hpp"

namespace cartfact::test {

/// Arcs both ways along every listed pair.
inline DiGraph undirected(std::size_t n, const std::vector<Arc>& pairs, std::vector<VertexId> loops = {}) {
  std::vector<Arc> arcs;
  for (const auto& [u, v] : pairs) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return DiGraph(n, std::move(arcs), std::move(loops));
}

/// Arcs both ways along every shadow edge of g; loops kept.
inline DiGraph symmetrize(const DiGraph& g) {
  const ShadowGraph s = shadow(g);
  std::vector<Arc> pairs;
  for (const ShadowEdge& e : s.edges()) pairs.emplace_back(e.u, e.v);
  return undirected(g.num_vertices(), pairs, g.loops());
}

inline DiGraph undirected_cycle(std::size_t n) {
  std::vector<Arc> pairs;
  for (VertexId i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return undirected(n, pairs);
}

inline DiGraph undirected_path(std::size_t n) {
  std::vector<Arc> pairs;
  for (VertexId i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return undirected(n, pairs);
}

inline bool coin(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

/// Adds each pair {u, v} with probability edge_p and orients it at random.
inline void add_random_edge(std::mt19937_64& rng, std::vector<Arc>& arcs, VertexId u, VertexId v) {
  switch (rng() % 3) {
    case 0: arcs.emplace_back(u, v); break;
    case 1: arcs.emplace_back(v, u); break;
    default:
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
  }
}

inline std::vector<VertexId> random_loops(std::mt19937_64& rng, std::size_t n, double loop_p) {
  std::vector<VertexId> loops;
  for (VertexId v = 0; v < n; ++v) {
    if (coin(rng, loop_p)) loops.push_back(v);
  }
  if (loops.size() == n && n > 0) loops.erase(loops.begin() + static_cast<std::ptrdiff_t>(rng() % n));
  return loops;
}

/// Random graph, possibly disconnected; always keeps an unlooped vertex.
inline DiGraph random_digraph(std::mt19937_64& rng, std::size_t n, double edge_p, double loop_p) {
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng, edge_p)) add_random_edge(rng, arcs, u, v);
    }
  }
  return DiGraph(n, std::move(arcs), random_loops(rng, n, loop_p));
}

/// Random spanning tree plus extra edges.
inline DiGraph random_connected_digraph(std::mt19937_64& rng, std::size_t n, double edge_p, double loop_p) {
  std::vector<Arc> arcs;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (VertexId v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(rng() % v);
    used[u][v] = true;
    add_random_edge(rng, arcs, u, v);
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!used[u][v] && coin(rng, edge_p)) add_random_edge(rng, arcs, u, v);
    }
  }
  return DiGraph(n, std::move(arcs), random_loops(rng, n, loop_p));
}

}  // namespace cartfact::test
