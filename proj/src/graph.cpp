#include "cartfact/graph.hpp"

#include <algorithm>
#include <string>

#include "cartfact/error.hpp"

namespace cartfact {

namespace {

void check_vertex(VertexId v, std::size_t n) {
  if (v >= n) throw Error(ErrorKind::kOutOfRange, "vertex id " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
}

}  // namespace

DiGraph::DiGraph(std::size_t num_vertices, std::vector<Arc> arcs, std::vector<VertexId> loops)
    : arcs_(std::move(arcs)), looped_(num_vertices, 0), index_(0) {
  if (num_vertices >= kUnreachable) throw Error(ErrorKind::kOutOfRange, "too many vertices");
  for (const auto& [u, v] : arcs_) {
    check_vertex(u, num_vertices);
    check_vertex(v, num_vertices);
    if (u == v) throw Error(ErrorKind::kInvalidArgument, "arc " + std::to_string(u) + "->" + std::to_string(v) + " is a loop; loops belong in the loop set");
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
    throw Error(ErrorKind::kDuplicate, "duplicate arc " + std::to_string(dup->first) + "->" + std::to_string(dup->second));
  }
  for (VertexId v : loops) {
    check_vertex(v, num_vertices);
    if (looped_[v]) throw Error(ErrorKind::kDuplicate, "duplicate loop at " + std::to_string(v));
    looped_[v] = 1;
  }
  num_loops_ = loops.size();

  out_offsets_.assign(num_vertices + 1, 0);
  for (const auto& a : arcs_) ++out_offsets_[a.first + 1];
  for (std::size_t v = 0; v < num_vertices; ++v) out_offsets_[v + 1] += out_offsets_[v];

  index_ = ArcIndex(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) index_.insert(arcs_[i].first, arcs_[i].second, static_cast<std::uint32_t>(i));
}

std::vector<VertexId> DiGraph::loops() const {
  std::vector<VertexId> out;
  out.reserve(num_loops_);
  for (std::size_t v = 0; v < looped_.size(); ++v) {
    if (looped_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::pair<bool, bool> oriented_arcs(const ShadowEdge& e, VertexId from) noexcept {
  const bool fwd = e.tag != DirTag::kBackward;
  const bool bwd = e.tag != DirTag::kForward;
  return from == e.u ? std::pair{fwd, bwd} : std::pair{bwd, fwd};
}

ShadowGraph::ShadowGraph(std::size_t num_vertices, std::vector<ShadowEdge> edges)
    : edges_(std::move(edges)), offsets_(num_vertices + 1, 0), index_(0) {
  if (num_vertices >= kUnreachable) throw Error(ErrorKind::kOutOfRange, "too many vertices");
  std::sort(edges_.begin(), edges_.end(), [](const ShadowEdge& a, const ShadowEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  index_ = ArcIndex(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const ShadowEdge& e = edges_[i];
    check_vertex(e.v, num_vertices);
    if (e.u >= e.v) throw Error(ErrorKind::kInvalidArgument, "shadow edge endpoints must satisfy u < v");
    if (!index_.insert(e.u, e.v, static_cast<std::uint32_t>(i))) {
      throw Error(ErrorKind::kDuplicate, "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v): emitting each edge at both endpoints in this
  // order leaves every neighbor list sorted.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[fill[edges_[i].v]++] = Incidence{edges_[i].u, static_cast<EdgeId>(i)};
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[fill[edges_[i].u]++] = Incidence{edges_[i].v, static_cast<EdgeId>(i)};
  }
}

ShadowGraph ShadowGraph::undirected(std::size_t num_vertices, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<ShadowEdge> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::kInvalidArgument, "undirected graph may not contain loops");
    out.push_back(ShadowEdge{std::min(a, b), std::max(a, b), DirTag::kBoth});
  }
  return ShadowGraph(num_vertices, std::move(out));
}

std::optional<EdgeId> ShadowGraph::find_edge(VertexId a, VertexId b) const noexcept {
  if (a == b) return std::nullopt;
  const std::uint32_t e = index_.find(std::min(a, b), std::max(a, b));
  if (e == ArcIndex::kMissing) return std::nullopt;
  return e;
}

bool operator==(const ShadowGraph& a, const ShadowGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const ShadowEdge& x = a.edges_[i];
    const ShadowEdge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.tag != y.tag) return false;
  }
  return true;
}

ShadowGraph shadow(const DiGraph& g) {
  std::vector<ShadowEdge> edges;
  edges.reserve(g.num_arcs());
  for (const auto& [u, v] : g.arcs()) {
    if (u < v) {
      edges.push_back(ShadowEdge{u, v, g.has_arc(v, u) ? DirTag::kBoth : DirTag::kForward});
    } else if (!g.has_arc(v, u)) {
      edges.push_back(ShadowEdge{v, u, DirTag::kBackward});
    }
  }
  return ShadowGraph(g.num_vertices(), std::move(edges));
}

DiGraph strip_loops(const DiGraph& g) {
  return DiGraph(g.num_vertices(), std::vector<Arc>(g.arcs().begin(), g.arcs().end()));
}

BfsOrder bfs(const ShadowGraph& s, VertexId root) {
  const std::size_t n = s.num_vertices();
  check_vertex(root, n);
  BfsOrder out;
  out.root = root;
  out.level.assign(n, kUnreachable);
  out.bfsnum.assign(n, kUnreachable);
  out.order.reserve(n);
  out.level[root] = 0;
  out.order.push_back(root);
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const VertexId v = out.order[head];
    out.bfsnum[v] = static_cast<std::uint32_t>(head);
    for (const Incidence& inc : s.neighbors(v)) {
      if (out.level[inc.neighbor] == kUnreachable) {
        out.level[inc.neighbor] = out.level[v] + 1;
        out.order.push_back(inc.neighbor);
      }
    }
  }
  if (out.order.size() != n) throw Error(ErrorKind::kDisconnected, "graph is not connected");

  out.down_offsets.assign(n + 1, 0);
  out.cross_offsets.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (const Incidence& inc : s.neighbors(v)) {
      if (out.level[inc.neighbor] + 1 == out.level[v]) ++out.down_offsets[v + 1];
      else if (out.level[inc.neighbor] == out.level[v]) ++out.cross_offsets[v + 1];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    out.down_offsets[v + 1] += out.down_offsets[v];
    out.cross_offsets[v + 1] += out.cross_offsets[v];
  }
  out.down.resize(out.down_offsets[n]);
  out.cross.resize(out.cross_offsets[n]);
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t d = out.down_offsets[v];
    std::uint32_t c = out.cross_offsets[v];
    for (const Incidence& inc : s.neighbors(v)) {
      if (out.level[inc.neighbor] + 1 == out.level[v]) out.down[d++] = inc;
      else if (out.level[inc.neighbor] == out.level[v]) out.cross[c++] = inc;
    }
  }
  return out;
}

std::vector<std::uint32_t> distances_from(const ShadowGraph& s, VertexId source) {
  check_vertex(source, s.num_vertices());
  std::vector<std::uint32_t> dist(s.num_vertices(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(s.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const Incidence& inc : s.neighbors(v)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[v] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

bool is_connected(const ShadowGraph& s) {
  if (s.num_vertices() == 0) return true;
  const auto dist = distances_from(s, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreachable; });
}

std::size_t min_degree(const ShadowGraph& s) {
  if (s.num_vertices() == 0) return 0;
  std::size_t best = s.degree(0);
  for (VertexId v = 1; v < s.num_vertices(); ++v) best = std::min(best, s.degree(v));
  return best;
}

std::optional<std::uint32_t> distance(const ShadowGraph& s, VertexId u, VertexId v) {
  check_vertex(v, s.num_vertices());
  const std::uint32_t d = distances_from(s, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

DiGraph from_shadow(const ShadowGraph& s, std::span<const VertexId> loops) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * s.num_edges());
  for (const ShadowEdge& e : s.edges()) {
    if (e.tag != DirTag::kBackward) arcs.emplace_back(e.u, e.v);
    if (e.tag != DirTag::kForward) arcs.emplace_back(e.v, e.u);
  }
  return DiGraph(s.num_vertices(), std::move(arcs), std::vector<VertexId>(loops.begin(), loops.end()));
}

DiGraph relabel(const DiGraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.num_vertices()) throw Error(ErrorKind::kInvalidArgument, "relabeling has wrong length");
  std::vector<std::uint8_t> seen(perm.size(), 0);
  for (VertexId p : perm) {
    check_vertex(p, perm.size());
    if (seen[p]++) throw Error(ErrorKind::kInvalidArgument, "relabeling is not a permutation");
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.num_arcs());
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
  std::vector<VertexId> loops;
  for (VertexId v : g.loops()) loops.push_back(perm[v]);
  return DiGraph(g.num_vertices(), std::move(arcs), std::move(loops));
}

}  // namespace cartfact
