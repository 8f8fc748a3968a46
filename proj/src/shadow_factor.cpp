#include "cartfact/shadow_factor.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_set>

#include "cartfact/error.hpp"

namespace cartfact {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Incident edges vu, vw lie on a common chordless square iff some x != v with
// x adjacent to u and w but not to v exists while u and w are not adjacent.
void unite_unsquared_pairs(const ShadowGraph& s, UnionFind& uf) {
  const std::size_t n = s.num_vertices();
  std::vector<std::uint32_t> slot(n, kUnreachable);  // neighbor of current v -> index in N(v)
  std::unordered_set<std::uint64_t> squared;
  for (VertexId v = 0; v < n; ++v) {
    const auto nv = s.neighbors(v);
    const std::uint64_t deg = nv.size();
    if (deg < 2) continue;
    for (std::uint32_t i = 0; i < deg; ++i) slot[nv[i].neighbor] = i;
    squared.clear();
    for (std::uint32_t i = 0; i < deg; ++i) {
      const VertexId u = nv[i].neighbor;
      for (const Incidence& ux : s.neighbors(u)) {
        const VertexId x = ux.neighbor;
        if (x == v || slot[x] != kUnreachable) continue;
        for (const Incidence& xw : s.neighbors(x)) {
          const std::uint32_t j = slot[xw.neighbor];
          if (j == kUnreachable || j == i) continue;
          if (s.adjacent(u, xw.neighbor)) continue;
          squared.insert(std::uint64_t{std::min(i, j)} * deg + std::max(i, j));
        }
      }
    }
    for (std::uint32_t i = 0; i < deg; ++i) {
      for (std::uint32_t j = i + 1; j < deg; ++j) {
        if (!squared.contains(std::uint64_t{i} * deg + j)) uf.unite(nv[i].edge, nv[j].edge);
      }
    }
    for (const Incidence& inc : nv) slot[inc.neighbor] = kUnreachable;
  }
}

}  // namespace

std::vector<ColorId> product_relation_colors(const ShadowGraph& s, VertexId root) {
  const std::size_t m = s.num_edges();
  const BfsOrder order = bfs(s, root);
  UnionFind uf(m);

  // Djokovic-Winkler: e = xy, f = ab related iff d(x,a) + d(y,b) != d(x,b) + d(y,a).
  // Restricted to BFS tree edges e = (parent, child).
  std::vector<std::uint32_t> dist_parent;
  for (VertexId x : order.order) {
    bool have_parent_dist = false;
    for (const Incidence& inc : s.neighbors(x)) {
      const VertexId y = inc.neighbor;
      if (order.level[y] != order.level[x] + 1) continue;
      // Spanning tree: every non-root vertex hangs off its first down-neighbor.
      if (order.down_edges(y).front().neighbor != x) continue;
      if (!have_parent_dist) {
        dist_parent = distances_from(s, x);
        have_parent_dist = true;
      }
      const auto dist_child = distances_from(s, y);
      for (EdgeId f = 0; f < m; ++f) {
        const ShadowEdge& ab = s.edge(f);
        if (dist_parent[ab.u] + dist_child[ab.v] != dist_parent[ab.v] + dist_child[ab.u]) uf.unite(inc.edge, f);
      }
    }
  }
  unite_unsquared_pairs(s, uf);

  // Deterministic numbering: by the lexicographically smallest (min, max) BFS
  // number pair over the class's edges.
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  std::vector<Key> best(m, Key{kUnreachable, kUnreachable});
  for (EdgeId e = 0; e < m; ++e) {
    const auto a = order.bfsnum[s.edge(e).u];
    const auto b = order.bfsnum[s.edge(e).v];
    Key k{std::min(a, b), std::max(a, b)};
    auto& slot = best[uf.find(e)];
    slot = std::min(slot, k);
  }
  std::vector<std::uint32_t> reps;
  for (EdgeId e = 0; e < m; ++e) {
    if (uf.find(e) == e) reps.push_back(e);
  }
  std::sort(reps.begin(), reps.end(), [&](std::uint32_t a, std::uint32_t b) { return best[a] < best[b]; });
  std::vector<ColorId> color_of_rep(m, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) color_of_rep[reps[i]] = static_cast<ColorId>(i);
  std::vector<ColorId> colors(m);
  for (EdgeId e = 0; e < m; ++e) colors[e] = color_of_rep[uf.find(e)];
  return colors;
}

Coordinatization coordinates_from_colors(const ShadowGraph& s, VertexId root, std::span<const ColorId> colors) {
  const std::size_t n = s.num_vertices();
  if (colors.size() != s.num_edges()) throw Error(ErrorKind::kInvalidArgument, "coloring does not match graph");
  const BfsOrder order = bfs(s, root);
  const std::size_t k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;

  std::vector<std::uint32_t> radices(k);
  std::vector<std::uint32_t> table(n * k);
  std::vector<std::uint32_t> component(n);
  std::vector<std::uint32_t> local_of_component(n);
  std::vector<VertexId> queue;
  for (ColorId i = 0; i < k; ++i) {
    // Components of the subgraph spanned by all edges not of color i.
    std::fill(component.begin(), component.end(), kUnreachable);
    std::uint32_t num_components = 0;
    for (VertexId start = 0; start < n; ++start) {
      if (component[start] != kUnreachable) continue;
      component[start] = num_components;
      queue.assign(1, start);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const Incidence& inc : s.neighbors(queue[head])) {
          if (colors[inc.edge] == i || component[inc.neighbor] != kUnreachable) continue;
          component[inc.neighbor] = num_components;
          queue.push_back(inc.neighbor);
        }
      }
      ++num_components;
    }

    // Unit layer of color i, in BFS order of the host graph.
    queue.assign(1, root);
    std::vector<std::uint8_t> in_layer(n, 0);
    in_layer[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : s.neighbors(queue[head])) {
        if (colors[inc.edge] != i || in_layer[inc.neighbor]) continue;
        in_layer[inc.neighbor] = 1;
        queue.push_back(inc.neighbor);
      }
    }
    std::vector<VertexId> layer;
    for (VertexId v : order.order) {
      if (in_layer[v]) layer.push_back(v);
    }

    if (layer.size() < 2) throw Error(ErrorKind::kInvalidColoring, "color " + std::to_string(i) + " has no edge at the root");

    std::fill(local_of_component.begin(), local_of_component.begin() + num_components, kUnreachable);
    for (std::uint32_t local = 0; local < layer.size(); ++local) {
      auto& slot = local_of_component[component[layer[local]]];
      if (slot != kUnreachable) {
        throw Error(ErrorKind::kInvalidColoring, "color " + std::to_string(i) + ": a complementary component meets the unit layer twice");
      }
      slot = local;
    }
    for (VertexId v = 0; v < n; ++v) {
      const std::uint32_t local = local_of_component[component[v]];
      if (local == kUnreachable) {
        throw Error(ErrorKind::kInvalidColoring, "color " + std::to_string(i) + ": vertex " + std::to_string(v) + " has no projection into the unit layer");
      }
      table[std::size_t{v} * k + i] = local;
    }
    radices[i] = static_cast<std::uint32_t>(layer.size());
  }
  try {
    return Coordinatization(std::move(radices), std::move(table), root);
  } catch (const Error& e) {
    throw Error(ErrorKind::kInvalidColoring, std::string("coloring does not induce a coordinatization: ") + e.what());
  }
}

ShadowFactorization factorization_from_colors(const ShadowGraph& s, VertexId root, std::vector<ColorId> colors) {
  Coordinatization coords = coordinates_from_colors(s, root, colors);
  const std::size_t k = coords.num_factors();
  const std::size_t n = s.num_vertices();

  std::vector<std::vector<VertexId>> layers(k);
  for (std::size_t i = 0; i < k; ++i) layers[i].assign(coords.radices()[i], kUnreachable);
  for (VertexId v = 0; v < n; ++v) {
    // A unit-layer vertex of color i agrees with the root everywhere but i.
    std::size_t differing = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (coords.coord(v, i) != coords.coord(root, i)) {
        ++differing;
        where = i;
      }
    }
    if (differing == 0) {
      for (std::size_t i = 0; i < k; ++i) layers[i][coords.coord(v, i)] = v;
    } else if (differing == 1) {
      layers[where][coords.coord(v, where)] = v;
    }
  }

  std::vector<std::vector<std::pair<VertexId, VertexId>>> factor_edges(k);
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    const ShadowEdge& edge = s.edge(e);
    const ColorId c = colors[e];
    for (std::size_t i = 0; i < k; ++i) {
      if ((coords.coord(edge.u, i) != coords.coord(edge.v, i)) != (i == c)) {
        throw Error(ErrorKind::kInvalidColoring, "edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "} does not change exactly its own coordinate");
      }
    }
    bool in_unit_layer = true;
    for (std::size_t i = 0; i < k && in_unit_layer; ++i) {
      in_unit_layer = i == c || coords.coord(edge.u, i) == coords.coord(root, i);
    }
    if (in_unit_layer) factor_edges[c].emplace_back(coords.coord(edge.u, c), coords.coord(edge.v, c));
  }

  std::vector<ShadowGraph> factors;
  std::uint64_t expected_edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    factors.push_back(ShadowGraph::undirected(coords.radices()[i], factor_edges[i]));
    expected_edges += factor_edges[i].size() * (n / coords.radices()[i]);
  }
  // Each edge maps injectively to (factor edge, fixed other coordinates); equal
  // counts make the map onto, and membership makes it well defined.
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    const ShadowEdge& edge = s.edge(e);
    const ColorId c = colors[e];
    if (!factors[c].adjacent(coords.coord(edge.u, c), coords.coord(edge.v, c))) {
      throw Error(ErrorKind::kInvalidColoring, "edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "} has no counterpart in its unit layer");
    }
  }
  if (expected_edges != s.num_edges()) throw Error(ErrorKind::kInvalidColoring, "layers are not all isomorphic to the unit layer");

  return ShadowFactorization{root, std::move(colors), std::move(factors), std::move(layers), std::move(coords)};
}

ShadowFactorization factor_shadow(const ShadowGraph& s, VertexId root) {
  if (s.num_vertices() == 0) throw Error(ErrorKind::kInvalidArgument, "empty graph");
  if (!is_connected(s)) throw Error(ErrorKind::kDisconnected, "graph is not connected");
  ShadowFactorization out = factorization_from_colors(s, root, product_relation_colors(s, root));
  if (out.num_colors() > std::max<std::size_t>(min_degree(s), s.num_vertices() > 1 ? 1 : 0)) {
    throw Error(ErrorKind::kInvalidColoring, "more factors than the minimum degree");
  }
  return out;
}

ShadowFactorization compose_factorizations(const Product& product, const ShadowGraph& product_shadow,
                                           std::span<const ShadowGraph> part_shadows,
                                           std::span<const ShadowFactorization> parts) {
  const Coordinatization& pc = product.coords;
  const std::size_t num_parts = pc.num_factors();
  if (parts.size() != num_parts || part_shadows.size() != num_parts) throw Error(ErrorKind::kInvalidArgument, "one factorization per factor required");

  std::vector<std::uint32_t> offset(num_parts + 1, 0);
  std::vector<std::uint32_t> radices;
  std::vector<ShadowGraph> factors;
  std::vector<std::uint32_t> root_coords(num_parts);
  for (std::size_t p = 0; p < num_parts; ++p) {
    offset[p + 1] = offset[p] + static_cast<std::uint32_t>(parts[p].num_colors());
    for (auto r : parts[p].coords.radices()) radices.push_back(r);
    for (const auto& f : parts[p].factors) factors.push_back(f);
    root_coords[p] = parts[p].root;
  }
  const std::size_t k = offset[num_parts];
  const std::size_t n = pc.num_vertices();
  const VertexId root = pc.vertex_at(root_coords);

  std::vector<std::uint32_t> table(n * k);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t p = 0; p < num_parts; ++p) {
      const auto c = parts[p].coords.coords(pc.coord(v, p));
      std::copy(c.begin(), c.end(), table.begin() + std::size_t{v} * k + offset[p]);
    }
  }

  std::vector<ColorId> colors(product_shadow.num_edges());
  for (EdgeId e = 0; e < product_shadow.num_edges(); ++e) {
    const ShadowEdge& edge = product_shadow.edge(e);
    std::size_t p = 0;
    while (p < num_parts && pc.coord(edge.u, p) == pc.coord(edge.v, p)) ++p;
    if (p == num_parts) throw Error(ErrorKind::kMismatch, "product edge joins equal coordinates");
    const auto fe = part_shadows[p].find_edge(pc.coord(edge.u, p), pc.coord(edge.v, p));
    if (!fe) throw Error(ErrorKind::kMismatch, "product edge has no factor edge");
    colors[e] = offset[p] + parts[p].edge_color[*fe];
  }

  std::vector<std::vector<VertexId>> layers;
  for (std::size_t p = 0; p < num_parts; ++p) {
    for (const auto& part_layer : parts[p].layers) {
      std::vector<VertexId> layer;
      std::vector<std::uint32_t> c = root_coords;
      for (VertexId a : part_layer) {
        c[p] = a;
        layer.push_back(pc.vertex_at(c));
      }
      layers.push_back(std::move(layer));
    }
  }
  return ShadowFactorization{root, std::move(colors), std::move(factors), std::move(layers),
                             Coordinatization(std::move(radices), std::move(table), root)};
}

}  // namespace cartfact
