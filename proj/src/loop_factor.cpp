#include "cartfact/loop_factor.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "cartfact/error.hpp"
#include "projection.hpp"

namespace cartfact {

DirectedFactorization factor_with_loops(const DiGraph& g, const ShadowGraph& shadow, const ShadowFactorization& sf,
                                        const BfsOrder& order, const DirectedFactorization& nf) {
  const std::size_t n = g.num_vertices();
  if (shadow.num_vertices() != n || sf.coords.num_vertices() != n || order.order.size() != n) {
    throw Error(ErrorKind::kMismatch, "graph, shadow, factorization and BFS order disagree on the vertex count");
  }
  if (order.root != sf.root) throw Error(ErrorKind::kMismatch, "BFS order and factorization use different roots");
  if (nf.partition.num_colors() != sf.num_colors()) throw Error(ErrorKind::kMismatch, "loopless factorization does not match the shadow factorization");
  if (g.is_looped(order.root)) throw Error(ErrorKind::kNoUnloopedVertex, "root " + std::to_string(order.root) + " is looped");

  ColorPartition partition = nf.partition;
  detail::Projector projector(sf.coords);
  std::vector<ClassId> to_merge;
  std::size_t merges = 0;

  for (VertexId v : order.order) {
    projector.load(v, partition);
    // Classes on which v agrees with the root project it onto the unlooped root.
    bool looped_projection = false;
    for (ClassId c : projector.differing_classes()) {
      if (g.is_looped(projector.vertex(c))) {
        looped_projection = true;
        break;
      }
    }
    if (g.is_looped(v) == looped_projection) continue;

    to_merge.clear();
    for (const Incidence& down : order.down_edges(v)) to_merge.push_back(partition.class_of(sf.edge_color[down.edge]));
    std::sort(to_merge.begin(), to_merge.end());
    to_merge.erase(std::unique(to_merge.begin(), to_merge.end()), to_merge.end());
    if (to_merge.size() < 2) {
      throw std::logic_error("loop mismatch at vertex " + std::to_string(v) + " whose down-edges share one class");
    }
    partition.merge(to_merge);
    ++merges;
  }

  DirectedFactorization out = assemble_factorization(g, sf, std::move(partition));
  out.directed_merges = nf.directed_merges;
  out.loop_merges = merges;
  return out;
}

DirectedFactorization factor_full(const DiGraph& g, const PipelineOptions& options, PipelineReport* report) {
  using Clock = std::chrono::steady_clock;
  const auto seconds_since = [](Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); };

  const std::size_t n = g.num_vertices();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "graph has no vertices");
  const ShadowGraph s = shadow(g);
  if (!is_connected(s)) throw Error(ErrorKind::kDisconnected, "graph is not connected");

  VertexId root = 0;
  if (options.root) {
    root = *options.root;
    if (root >= n) throw Error(ErrorKind::kOutOfRange, "root out of range");
    if (g.is_looped(root)) throw Error(ErrorKind::kNoUnloopedVertex, "root " + std::to_string(root) + " is looped");
  } else {
    while (root < n && g.is_looped(root)) ++root;
    if (root == n) throw Error(ErrorKind::kNoUnloopedVertex, "every vertex is looped; the factorization is not unique");
  }

  auto t = Clock::now();
  const ShadowFactorization sf = factor_shadow(s, root);
  const double shadow_seconds = seconds_since(t);

  t = Clock::now();
  const BfsOrder order = bfs(s, root);
  DirectedFactorization result = factor_directed(g.num_loops() ? strip_loops(g) : g, s, sf, order);
  const double directed_seconds = seconds_since(t);

  double loops_seconds = 0;
  if (g.num_loops() != 0) {
    t = Clock::now();
    result = factor_with_loops(g, s, sf, order, result);
    loops_seconds = seconds_since(t);
  }

  if (report) *report = PipelineReport{root, sf.num_colors(), shadow_seconds, directed_seconds, loops_seconds};
  return result;
}

}  // namespace cartfact
