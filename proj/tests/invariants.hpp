#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cartfact/loop_factor.hpp"
#include "cartfact/oracle.hpp"
#include "cartfact/product.hpp"
#include "test_util.hpp"

// Randomized product invariants. Each check draws one instance from rng and
// returns an empty string on success or a description of the failure.
namespace cartfact::invariants {

inline std::vector<DiGraph> random_factors(std::mt19937_64& rng, std::size_t min_count, std::size_t max_count) {
  std::vector<DiGraph> out;
  const std::size_t k = min_count + rng() % (max_count - min_count + 1);
  for (std::size_t i = 0; i < k; ++i) out.push_back(test::random_connected_digraph(rng, 1 + rng() % 4, 0.4, 0.3));
  return out;
}

inline std::string shadow_of_product(std::mt19937_64& rng) {
  const std::vector<DiGraph> fs = random_factors(rng, 2, 3);
  const Product p = cartesian_product(fs);
  const ShadowGraph s = shadow(p.graph);
  std::vector<DiGraph> shadows;
  for (const DiGraph& f : fs) shadows.push_back(test::symmetrize(strip_loops(f)));
  const ShadowGraph product_of_shadows = shadow(cartesian_product(shadows).graph);
  if (s.num_edges() != product_of_shadows.num_edges()) return "edge counts differ";
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    const ShadowEdge& a = s.edge(e);
    const ShadowEdge& b = product_of_shadows.edge(e);
    if (a.u != b.u || a.v != b.v) return "edge sets differ";
    std::size_t i = 0;
    while (p.coords.coord(a.u, i) == p.coords.coord(a.v, i)) ++i;
    const auto fe = shadow(fs[i]).find_edge(p.coords.coord(a.u, i), p.coords.coord(a.v, i));
    if (!fe || shadow(fs[i]).edge(*fe).tag != a.tag) return "direction tag differs from the factor's";
  }
  return {};
}

inline std::string distance_formula(std::mt19937_64& rng) {
  const std::vector<DiGraph> fs = random_factors(rng, 2, 2);
  const Product p = cartesian_product(fs);
  const ShadowGraph s = shadow(p.graph);
  for (int trial = 0; trial < 5; ++trial) {
    const auto u = static_cast<VertexId>(rng() % p.graph.num_vertices());
    const auto v = static_cast<VertexId>(rng() % p.graph.num_vertices());
    std::uint32_t sum = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) sum += *distance(shadow(fs[i]), p.coords.coord(u, i), p.coords.coord(v, i));
    if (distance(s, u, v) != sum) return "distance " + std::to_string(u) + "-" + std::to_string(v) + " is not the sum";
  }
  return {};
}

inline std::string associativity(std::mt19937_64& rng) {
  const std::vector<DiGraph> fs = random_factors(rng, 2, 4);
  const DiGraph flat = cartesian_product(fs).graph;
  // Random split into consecutive groups; row-major ids coincide under the
  // natural coordinate bijection.
  std::vector<DiGraph> grouped;
  std::size_t start = 0;
  while (start < fs.size()) {
    const std::size_t len = 1 + rng() % (fs.size() - start);
    grouped.push_back(cartesian_product(std::span<const DiGraph>(fs).subspan(start, len)).graph);
    start += len;
  }
  if (cartesian_product(grouped).graph != flat) return "grouped product differs";
  return {};
}

inline std::string commutativity(std::mt19937_64& rng) {
  const std::vector<DiGraph> fs = random_factors(rng, 2, 4);
  const Product p = cartesian_product(fs);
  std::vector<std::size_t> perm(fs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<DiGraph> permuted;
  for (std::size_t j : perm) permuted.push_back(fs[j]);
  const Product q = cartesian_product(permuted);
  std::vector<VertexId> map(p.graph.num_vertices());
  CoordVector c(fs.size());
  for (VertexId x = 0; x < map.size(); ++x) {
    for (std::size_t j = 0; j < perm.size(); ++j) c[j] = p.coords.coord(x, perm[j]);
    map[x] = q.coords.vertex_at(c);
  }
  if (relabel(p.graph, map) != q.graph) return "permuted product differs";
  return {};
}

inline std::vector<std::size_t> random_positions(std::mt19937_64& rng, std::size_t k) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) {
    if (rng() % 2) pos.push_back(i);
  }
  if (pos.empty()) pos.push_back(rng() % k);
  return pos;
}

inline std::string layer_convexity(std::mt19937_64& rng) {
  const std::vector<DiGraph> fs = random_factors(rng, 2, 3);
  const Product p = cartesian_product(fs);
  const ShadowGraph s = shadow(p.graph);
  const std::vector<std::size_t> pos = random_positions(rng, fs.size());
  const Layer layer = unit_layer(p.graph, p.coords, pos);
  std::vector<std::uint8_t> inside(p.graph.num_vertices(), 0);
  for (VertexId v : layer.embedding) inside[v] = 1;
  for (VertexId u : layer.embedding) {
    const auto du = distances_from(s, u);
    for (VertexId w : layer.embedding) {
      const auto dw = distances_from(s, w);
      for (VertexId x = 0; x < p.graph.num_vertices(); ++x) {
        if (!inside[x] && du[x] + dw[x] == du[w]) return "shortest path leaves the layer through " + std::to_string(x);
      }
    }
  }
  return {};
}

inline std::string unique_minimizer(std::mt19937_64& rng) {
  const std::vector<DiGraph> fs = random_factors(rng, 2, 3);
  const Product p = cartesian_product(fs);
  const ShadowGraph s = shadow(p.graph);
  const std::vector<std::size_t> pos = random_positions(rng, fs.size());
  const auto v = static_cast<VertexId>(rng() % p.graph.num_vertices());
  const VertexId proj = p.coords.vertex_at(project_vertex(p.coords.coords(v), pos, p.coords.coords(p.coords.root())));
  const auto dv = distances_from(s, v);
  for (VertexId x : unit_layer(p.graph, p.coords, pos).embedding) {
    if (x != proj && dv[x] <= dv[proj]) return "projection is not the unique closest layer vertex";
  }
  std::uint32_t dropped = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (std::find(pos.begin(), pos.end(), i) == pos.end()) dropped += *distance(shadow(fs[i]), p.coords.coord(v, i), 0);
  }
  if (dv[proj] != dropped) return "projection distance is not the sum over dropped positions";
  return {};
}

inline std::string factor_count_bound(std::mt19937_64& rng) {
  GeneratorParams params;
  params.num_factors = 1 + rng() % 4;
  params.max_size = 4;
  params.loop_probability = 0.3;
  params.seed = rng();
  const DiGraph g = gen_product_instance(params).graph;
  PipelineReport report;
  const DirectedFactorization f = factor_full(g, {}, &report);
  const std::size_t delta = min_degree(shadow(g));
  if (report.shadow_factors > delta) return "shadow has more factors than its minimum degree";
  if (f.factors.size() > delta) return "more factors than the minimum degree";
  return {};
}

struct Invariant {
  const char* name;
  std::function<std::string(std::mt19937_64&)> check;
};

inline std::vector<Invariant> all() {
  return {{"shadow of product", shadow_of_product},
          {"distance formula", distance_formula},
          {"associativity", associativity},
          {"commutativity", commutativity},
          {"layer convexity", layer_convexity},
          {"unique minimizer", unique_minimizer},
          {"factor count bound", factor_count_bound}};
}

}  // namespace cartfact::invariants
