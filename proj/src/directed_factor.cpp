#include "cartfact/directed_factor.hpp"

#include <algorithm>
#include <string>

#include "cartfact/error.hpp"
#include "projection.hpp"

namespace cartfact {

namespace {

void check_inputs(std::size_t n, const ShadowGraph& shadow, const ShadowFactorization& sf, const BfsOrder& order) {
  if (shadow.num_vertices() != n || sf.coords.num_vertices() != n || order.level.size() != n) {
    throw Error(ErrorKind::kMismatch, "graph, shadow, factorization and BFS order disagree on the vertex count");
  }
  if (sf.edge_color.size() != shadow.num_edges()) throw Error(ErrorKind::kMismatch, "factorization does not color the shadow");
  if (order.root != sf.root || sf.coords.root() != sf.root) throw Error(ErrorKind::kMismatch, "BFS order and factorization use different roots");
  if (sf.coords.num_factors() != sf.num_colors()) throw Error(ErrorKind::kMismatch, "factorization has inconsistent color count");
}

// Projected edge p_X(v)p_X(u) for an edge vu of original color j whose class
// projects v onto pv: u differs from v in coordinate j only.
EdgeId projected_edge(const ShadowGraph& shadow, const Coordinatization& coords, VertexId v, VertexId u, ColorId j,
                      std::uint64_t pv_code, VertexId pv) {
  const std::int64_t step = (static_cast<std::int64_t>(coords.coord(u, j)) - coords.coord(v, j)) * static_cast<std::int64_t>(coords.stride(j));
  const VertexId pu = coords.vertex_at_code(static_cast<std::uint64_t>(static_cast<std::int64_t>(pv_code) + step));
  const auto pe = shadow.find_edge(pv, pu);
  if (!pe) {
    throw Error(ErrorKind::kMismatch, "projection of edge {" + std::to_string(v) + "," + std::to_string(u) + "} is not an edge; the factorization does not fit the shadow");
  }
  return *pe;
}

bool consistent(const ShadowGraph& shadow, EdgeId e, VertexId v, EdgeId pe, VertexId pv) {
  return oriented_arcs(shadow.edge(e), v) == oriented_arcs(shadow.edge(pe), pv);
}

}  // namespace

DirectedFactorization factor_directed(const DiGraph& g, const ShadowGraph& shadow, const ShadowFactorization& sf,
                                      const BfsOrder& order) {
  const std::size_t n = g.num_vertices();
  if (g.num_loops() != 0) throw Error(ErrorKind::kInvalidArgument, "directed factorization expects a loopless graph");
  check_inputs(n, shadow, sf, order);
  std::size_t arcs_in_shadow = 0;
  for (const ShadowEdge& e : shadow.edges()) {
    const auto [fwd, bwd] = oriented_arcs(e, e.u);
    if (fwd != g.has_arc(e.u, e.v) || bwd != g.has_arc(e.v, e.u)) throw Error(ErrorKind::kMismatch, "shadow does not match the graph");
    arcs_in_shadow += fwd + bwd;
  }
  if (arcs_in_shadow != g.num_arcs()) throw Error(ErrorKind::kMismatch, "shadow does not match the graph");

  const Coordinatization& coords = sf.coords;
  ColorPartition partition(sf.num_colors());
  detail::Projector projector(coords);
  std::vector<ClassId> to_merge;
  std::size_t merges = 0;

  for (VertexId v : order.order) {
    if (v == order.root) continue;
    projector.load(v, partition);
    bool merged = false;
    for (const auto edges : {order.down_edges(v), order.cross_edges(v)}) {
      for (const Incidence& inc : edges) {
        const ColorId j = sf.edge_color[inc.edge];
        const ClassId c = partition.class_of(j);
        const VertexId pv = projector.vertex(c);
        if (pv == v) continue;  // vu lies in the unit layer of its class
        const EdgeId pe = projected_edge(shadow, coords, v, inc.neighbor, j, projector.code(c), pv);
        if (consistent(shadow, inc.edge, v, pe, pv)) continue;

        to_merge.assign(1, c);
        for (const Incidence& down : order.down_edges(v)) to_merge.push_back(partition.class_of(sf.edge_color[down.edge]));
        std::sort(to_merge.begin(), to_merge.end());
        to_merge.erase(std::unique(to_merge.begin(), to_merge.end()), to_merge.end());
        if (to_merge.size() < 2) {
          throw std::logic_error("inconsistent edge at vertex " + std::to_string(v) + " whose down-edges share its class");
        }
        partition.merge(to_merge);
        ++merges;
        merged = true;
        break;
      }
      if (merged) break;
    }
  }

  DirectedFactorization out = assemble_factorization(g, sf, std::move(partition));
  out.directed_merges = merges;
  return out;
}

std::size_t count_inconsistent_edges(const ShadowGraph& shadow, const ShadowFactorization& sf, const BfsOrder& order,
                                     const ColorPartition& partition) {
  check_inputs(shadow.num_vertices(), shadow, sf, order);
  if (partition.num_colors() != sf.num_colors()) throw Error(ErrorKind::kMismatch, "partition does not match the factorization");
  detail::Projector projector(sf.coords);
  std::size_t bad = 0;
  for (VertexId v : order.order) {
    projector.load(v, partition);
    for (const auto edges : {order.down_edges(v), order.cross_edges(v)}) {
      for (const Incidence& inc : edges) {
        const ColorId j = sf.edge_color[inc.edge];
        const ClassId c = partition.class_of(j);
        const VertexId pv = projector.vertex(c);
        if (pv == v) continue;
        const EdgeId pe = projected_edge(shadow, sf.coords, v, inc.neighbor, j, projector.code(c), pv);
        if (!consistent(shadow, inc.edge, v, pe, pv)) ++bad;
      }
    }
  }
  return bad;
}

DirectedFactorization assemble_factorization(const DiGraph& g, const ShadowFactorization& sf, ColorPartition partition) {
  const std::size_t n = g.num_vertices();
  const std::vector<ClassId> classes = partition.classes();
  const std::size_t k = classes.size();

  DirectedFactorization out;
  std::vector<std::uint32_t> radices;
  std::vector<std::uint32_t> local(n, kUnreachable);  // non-root unit-layer vertex -> local id
  std::vector<std::uint32_t> root_local(k);
  std::vector<std::uint32_t> index_of_class(partition.num_colors(), 0);
  for (std::size_t q = 0; q < k; ++q) {
    std::vector<std::size_t> positions(partition.members(classes[q]).begin(), partition.members(classes[q]).end());
    std::sort(positions.begin(), positions.end());
    Layer layer = unit_layer(g, sf.coords, positions);
    for (std::uint32_t i = 0; i < layer.embedding.size(); ++i) {
      if (layer.embedding[i] == sf.root) root_local[q] = i;
      else local[layer.embedding[i]] = i;
    }
    index_of_class[classes[q]] = static_cast<std::uint32_t>(q);
    radices.push_back(static_cast<std::uint32_t>(layer.embedding.size()));
    out.factors.push_back(std::move(layer.graph));
    out.factor_layers.push_back(std::move(layer.embedding));
    out.factor_colors.emplace_back(positions.begin(), positions.end());
  }

  std::vector<std::uint32_t> table(n * k);
  detail::Projector projector(sf.coords);
  for (VertexId v = 0; v < n; ++v) {
    std::copy(root_local.begin(), root_local.end(), table.begin() + std::size_t{v} * k);
    projector.load(v, partition);
    for (ClassId c : projector.differing_classes()) {
      table[std::size_t{v} * k + index_of_class[c]] = local[projector.vertex(c)];
    }
  }
  out.coords = Coordinatization(std::move(radices), std::move(table), sf.root);
  out.partition = std::move(partition);
  return out;
}

}  // namespace cartfact
