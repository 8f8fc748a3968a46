#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cartfact/arc_index.hpp"

namespace cartfact {

using EdgeId = std::uint32_t;
using Arc = std::pair<VertexId, VertexId>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Finite directed graph with loops on the vertices 0..n-1.
///
/// Non-loop arcs are kept sorted by (origin, terminus); loops are a vertex
/// attribute and never appear in the arc list.
class DiGraph {
 public:
  DiGraph() = default;

  /// Throws Error on out-of-range ids, self-arcs, or duplicate arcs/loops.
  DiGraph(std::size_t num_vertices, std::vector<Arc> arcs, std::vector<VertexId> loops = {});

  std::size_t num_vertices() const noexcept { return looped_.size(); }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  std::size_t num_loops() const noexcept { return num_loops_; }

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  /// Arcs leaving v, sorted by terminus.
  std::span<const Arc> out_arcs(VertexId v) const noexcept {
    return std::span<const Arc>(arcs_).subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
  }

  /// has_arc(v, v) reports whether v is looped.
  bool has_arc(VertexId u, VertexId v) const noexcept {
    return u == v ? is_looped(u) : index_.contains(u, v);
  }
  bool is_looped(VertexId v) const noexcept { return looped_[v] != 0; }
  std::vector<VertexId> loops() const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.arcs_ == b.arcs_ && a.looped_ == b.looped_;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<std::uint8_t> looped_;
  std::size_t num_loops_ = 0;
  ArcIndex index_;
};

/// Which arcs an undirected shadow edge {u, v} (u < v) stands for.
enum class DirTag : std::uint8_t {
  kForward,   // u -> v only
  kBackward,  // v -> u only
  kBoth,
};

struct ShadowEdge {
  VertexId u;  // smaller endpoint
  VertexId v;
  DirTag tag;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Arc presence along an edge when read from `from` to the other endpoint:
/// first = from->other, second = other->from.
std::pair<bool, bool> oriented_arcs(const ShadowEdge& e, VertexId from) noexcept;

/// Simple undirected graph whose edges remember the arcs they shadow.
class ShadowGraph {
 public:
  ShadowGraph() = default;
  /// Edges must satisfy u < v and be free of duplicates.
  ShadowGraph(std::size_t num_vertices, std::vector<ShadowEdge> edges);

  /// Undirected graph: every edge tagged kBoth. Pairs may be given in any order.
  static ShadowGraph undirected(std::size_t num_vertices, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const ShadowEdge> edges() const noexcept { return edges_; }
  const ShadowEdge& edge(EdgeId e) const noexcept { return edges_[e]; }

  /// Neighbors of v sorted by neighbor id.
  std::span<const Incidence> neighbors(VertexId v) const noexcept {
    return std::span<const Incidence>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const noexcept;
  bool adjacent(VertexId a, VertexId b) const noexcept { return find_edge(a, b).has_value(); }

  friend bool operator==(const ShadowGraph& a, const ShadowGraph& b);

 private:
  std::vector<ShadowEdge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  ArcIndex index_;
};

/// Breadth-first layering of a connected shadow graph.
struct BfsOrder {
  VertexId root = 0;
  std::vector<VertexId> order;         // bfs number -> vertex
  std::vector<std::uint32_t> bfsnum;   // vertex -> bfs number
  std::vector<std::uint32_t> level;    // vertex -> distance from root
  std::vector<std::uint32_t> down_offsets;
  std::vector<Incidence> down;
  std::vector<std::uint32_t> cross_offsets;
  std::vector<Incidence> cross;

  std::span<const Incidence> down_edges(VertexId v) const noexcept {
    return std::span<const Incidence>(down).subspan(down_offsets[v], down_offsets[v + 1] - down_offsets[v]);
  }
  std::span<const Incidence> cross_edges(VertexId v) const noexcept {
    return std::span<const Incidence>(cross).subspan(cross_offsets[v], cross_offsets[v + 1] - cross_offsets[v]);
  }
};

ShadowGraph shadow(const DiGraph& g);
DiGraph strip_loops(const DiGraph& g);

/// Throws Error(kDisconnected) if some vertex is unreachable from root.
BfsOrder bfs(const ShadowGraph& s, VertexId root);

bool is_connected(const ShadowGraph& s);
/// Zero for the empty graph.
std::size_t min_degree(const ShadowGraph& s);
/// Distances from source; kUnreachable marks other components.
std::vector<std::uint32_t> distances_from(const ShadowGraph& s, VertexId source);
/// nullopt when u and v lie in different components.
std::optional<std::uint32_t> distance(const ShadowGraph& s, VertexId u, VertexId v);

/// Rebuilds the directed graph from its shadow and loop set.
DiGraph from_shadow(const ShadowGraph& s, std::span<const VertexId> loops);

/// Relabels vertex v as perm[v].
DiGraph relabel(const DiGraph& g, std::span<const VertexId> perm);

}  // namespace cartfact
