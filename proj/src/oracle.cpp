#include "cartfact/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cartfact/error.hpp"
#include "cartfact/product.hpp"

namespace cartfact {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
bool chance(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent_[find(a)] = find(b); }
  /// Dense component labels 0..count-1.
  std::vector<std::uint32_t> labels(std::uint32_t& count) {
    std::vector<std::uint32_t> label(parent_.size(), kUnreachable), out(parent_.size());
    count = 0;
    for (std::uint32_t v = 0; v < parent_.size(); ++v) {
      auto& l = label[find(v)];
      if (l == kUnreachable) l = count++;
      out[v] = l;
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Checks that the edges of one color, read through the grid, form identical
// copies of a single factor. `index` is the coordinate that varies inside a
// layer of this color, `layer` the one constant inside it.
bool layers_agree(const DiGraph& g, const ShadowGraph& s, std::span<const std::uint8_t> color_of_edge, std::uint8_t color,
                  std::span<const std::uint32_t> index, std::span<const std::uint32_t> layer, std::uint32_t num_layers,
                  std::uint32_t factor_size, std::uint32_t reference_layer) {
  // Arcs of the reference layer, in factor coordinates.
  std::vector<std::uint8_t> ref(std::size_t{factor_size} * factor_size, 0);
  std::size_t ref_edges = 0;
  std::size_t edges = 0;
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (color_of_edge[e] != color) continue;
    ++edges;
    const ShadowEdge& edge = s.edge(e);
    if (layer[edge.u] != reference_layer) continue;
    ++ref_edges;
    const auto [fwd, bwd] = oriented_arcs(edge, edge.u);
    ref[index[edge.u] * factor_size + index[edge.v]] = fwd ? 1 : 2;
    ref[index[edge.v] * factor_size + index[edge.u]] = bwd ? 1 : 2;
  }
  if (edges != ref_edges * num_layers) return false;
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (color_of_edge[e] != color) continue;
    const ShadowEdge& edge = s.edge(e);
    const std::uint8_t fwd = ref[index[edge.u] * factor_size + index[edge.v]];
    const std::uint8_t bwd = ref[index[edge.v] * factor_size + index[edge.u]];
    if (fwd == 0) return false;
    if ((fwd == 1) != g.has_arc(edge.u, edge.v) || (bwd == 1) != g.has_arc(edge.v, edge.u)) return false;
  }
  return true;
}

}  // namespace

bool reconstruct_check(const DiGraph& g, std::span<const DiGraph> factors, const std::vector<CoordVector>& table) {
  std::vector<std::uint32_t> radices;
  for (const DiGraph& f : factors) radices.push_back(static_cast<std::uint32_t>(f.num_vertices()));
  std::vector<std::uint32_t> flat;
  for (const CoordVector& row : table) {
    if (row.size() != factors.size()) throw Error(ErrorKind::kInvalidArgument, "coordinate row has wrong length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (factors.empty() && table.size() != 1) throw Error(ErrorKind::kInvalidArgument, "coordinate map is not a bijection");
  const Coordinatization coords(std::move(radices), std::move(flat), 0);
  if (coords.num_vertices() != g.num_vertices() || table.size() != g.num_vertices()) {
    throw Error(ErrorKind::kInvalidArgument, "coordinate map is not a bijection");
  }
  if (factors.empty()) return g.num_arcs() == 0 && g.num_loops() == 0;

  const Product p = cartesian_product(factors);
  if (p.graph.num_arcs() != g.num_arcs() || p.graph.num_loops() != g.num_loops()) return false;
  for (const auto& [x, y] : p.graph.arcs()) {
    if (!g.has_arc(coords.vertex_at_code(x), coords.vertex_at_code(y))) return false;
  }
  for (VertexId x : p.graph.loops()) {
    if (!g.is_looped(coords.vertex_at_code(x))) return false;
  }
  return true;
}

bool reconstruct_check(const DiGraph& g, const DirectedFactorization& f) {
  return reconstruct_check(g, f.factors, f.coords.table());
}

bool brute_force_prime(const DiGraph& g, const OracleLimits& limits) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "graph has no vertices");
  const ShadowGraph s = shadow(g);
  if (!is_connected(s)) throw Error(ErrorKind::kDisconnected, "graph is not connected");
  if (n == 1) return false;
  const std::size_t m = s.num_edges();
  if (m > limits.max_edges || m >= 63) throw Error(ErrorKind::kBoundExceeded, std::to_string(m) + " edges exceed the oracle bound of " + std::to_string(limits.max_edges));
  VertexId unlooped = 0;
  while (unlooped < n && g.is_looped(unlooped)) ++unlooped;
  if (unlooped == n) throw Error(ErrorKind::kNoUnloopedVertex, "primality needs an unlooped vertex");

  std::vector<std::uint8_t> color(m);
  std::vector<VertexId> cell(n);
  // Edge 0 is always color 0; the swapped coloring describes the same split.
  for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << m); mask += 2) {
    Components comp_a(n), comp_b(n);
    for (EdgeId e = 0; e < m; ++e) {
      color[e] = static_cast<std::uint8_t>((mask >> e) & 1);
      (color[e] ? comp_b : comp_a).unite(s.edge(e).u, s.edge(e).v);
    }
    std::uint32_t num_a = 0, num_b = 0;
    const auto a = comp_a.labels(num_a);  // which A-layer; doubles as the B coordinate
    const auto b = comp_b.labels(num_b);  // which B-layer; doubles as the A coordinate
    if (std::uint64_t{num_a} * num_b != n || num_a < 2 || num_b < 2) continue;
    std::fill(cell.begin(), cell.end(), kUnreachable);
    bool grid = true;
    for (VertexId v = 0; v < n && grid; ++v) {
      auto& c = cell[std::size_t{a[v]} * num_b + b[v]];
      grid = c == kUnreachable;
      c = v;
    }
    if (!grid) continue;
    // A-layers have num_b vertices indexed by b; B-layers have num_a indexed by a.
    if (!layers_agree(g, s, color, 0, b, a, num_a, num_b, a[unlooped])) continue;
    if (!layers_agree(g, s, color, 1, a, b, num_b, num_a, b[unlooped])) continue;

    // Loop rule with factor loops read off the layers through the unlooped vertex.
    bool loops_ok = true;
    for (VertexId v = 0; v < n && loops_ok; ++v) {
      const bool factor_a_loop = g.is_looped(cell[std::size_t{a[unlooped]} * num_b + b[v]]);
      const bool factor_b_loop = g.is_looped(cell[std::size_t{a[v]} * num_b + b[unlooped]]);
      loops_ok = g.is_looped(v) == (factor_a_loop || factor_b_loop);
    }
    if (loops_ok) return false;
  }
  return true;
}

bool iso_check(const DiGraph& g, const DiGraph& h, const OracleLimits& limits) {
  const std::size_t n = g.num_vertices();
  if (n > limits.max_vertices || h.num_vertices() > limits.max_vertices) {
    throw Error(ErrorKind::kBoundExceeded, "isomorphism check limited to " + std::to_string(limits.max_vertices) + " vertices");
  }
  if (h.num_vertices() != n || g.num_arcs() != h.num_arcs() || g.num_loops() != h.num_loops()) return false;

  struct Signature {
    std::size_t out = 0, in = 0;
    bool looped = false;
    bool operator==(const Signature&) const = default;
  };
  const auto signatures = [n](const DiGraph& x) {
    std::vector<Signature> sig(n);
    for (const auto& [u, v] : x.arcs()) {
      ++sig[u].out;
      ++sig[v].in;
    }
    for (VertexId v = 0; v < n; ++v) sig[v].looped = x.is_looped(v);
    return sig;
  };
  const auto sg = signatures(g);
  const auto sh = signatures(h);

  std::vector<VertexId> image(n, kUnreachable);
  std::vector<std::uint8_t> used(n, 0);
  const auto extend = [&](auto&& self, VertexId v) -> bool {
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || !(sg[v] == sh[w])) continue;
      bool ok = true;
      for (VertexId x = 0; x < v && ok; ++x) {
        ok = g.has_arc(v, x) == h.has_arc(w, image[x]) && g.has_arc(x, v) == h.has_arc(image[x], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

bool isomorphic_multisets(std::span<const DiGraph> a, std::span<const DiGraph> b, const OracleLimits& limits) {
  if (a.size() != b.size()) return false;
  // Isomorphism is an equivalence, so greedy pairing is exact.
  std::vector<std::uint8_t> taken(b.size(), 0);
  for (const DiGraph& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (!taken[j] && iso_check(x, b[j], limits)) {
        taken[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<VertexId> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  return perm;
}

DiGraph random_prime_factor(std::mt19937_64& rng, std::size_t size, double edge_probability, double loop_probability,
                            const OracleLimits& limits) {
  if (size < 2) throw Error(ErrorKind::kInvalidArgument, "prime factors need at least two vertices");
  for (;;) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 1; v < size; ++v) pairs.emplace_back(static_cast<VertexId>(below(rng, v)), v);
    for (VertexId u = 0; u < size; ++u) {
      for (VertexId v = u + 1; v < size; ++v) {
        const bool in_tree = std::find(pairs.begin(), pairs.begin() + (size - 1), std::pair{u, v}) != pairs.begin() + (size - 1);
        if (!in_tree && chance(rng, edge_probability)) pairs.emplace_back(u, v);
      }
    }
    if (pairs.size() > limits.max_edges) continue;
    std::vector<Arc> arcs;
    for (auto [u, v] : pairs) {
      switch (below(rng, 3)) {
        case 0: arcs.emplace_back(u, v); break;
        case 1: arcs.emplace_back(v, u); break;
        default:
          arcs.emplace_back(u, v);
          arcs.emplace_back(v, u);
      }
    }
    std::vector<VertexId> loops;
    for (VertexId v = 0; v < size; ++v) {
      if (chance(rng, loop_probability)) loops.push_back(v);
    }
    if (loops.size() == size) loops.erase(loops.begin() + static_cast<std::ptrdiff_t>(below(rng, size)));
    DiGraph candidate(size, std::move(arcs), std::move(loops));
    if (brute_force_prime(candidate, limits)) return candidate;
  }
}

ProductInstance gen_product_instance(const GeneratorParams& params) {
  if (params.num_factors == 0 || params.min_size < 2 || params.max_size < params.min_size) {
    throw Error(ErrorKind::kInvalidArgument, "need at least one factor and sizes 2 <= min <= max");
  }
  std::mt19937_64 rng(params.seed);
  ProductInstance out;
  for (std::size_t i = 0; i < params.num_factors; ++i) {
    const std::size_t size = params.min_size + below(rng, params.max_size - params.min_size + 1);
    out.factors.push_back(random_prime_factor(rng, size, params.edge_probability, params.loop_probability, params.limits));
  }
  const Product p = cartesian_product(out.factors);
  out.relabeling = random_permutation(rng, p.graph.num_vertices());
  out.graph = relabel(p.graph, out.relabeling);
  return out;
}

}  // namespace cartfact
