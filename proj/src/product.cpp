#include "cartfact/product.hpp"

#include <algorithm>
#include <string>

#include "cartfact/error.hpp"

namespace cartfact {

namespace {

std::uint64_t grid_size(std::span<const std::uint32_t> radices) {
  std::uint64_t n = 1;
  for (auto r : radices) {
    if (r == 0) throw Error(ErrorKind::kInvalidArgument, "factor with zero vertices");
    n *= r;
    if (n >= kUnreachable) throw Error(ErrorKind::kOutOfRange, "product too large");
  }
  return n;
}

}  // namespace

Coordinatization::Coordinatization(std::vector<std::uint32_t> radices, std::vector<std::uint32_t> table, VertexId root)
    : radices_(std::move(radices)), table_(std::move(table)), root_(root) {
  const std::size_t k = radices_.size();
  const std::uint64_t n = grid_size(radices_);
  if (table_.size() != n * k) throw Error(ErrorKind::kInvalidArgument, "coordinate table does not cover the grid");
  if (root >= n) throw Error(ErrorKind::kOutOfRange, "root out of range");
  strides_.assign(k, 1);
  for (std::size_t i = k; i-- > 1;) strides_[i - 1] = strides_[i] * radices_[i];

  code_of_.resize(n);
  vertex_at_code_.assign(n, kUnreachable);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t x = table_[std::size_t{v} * k + i];
      if (x >= radices_[i]) {
        throw Error(ErrorKind::kInvalidArgument, "coordinate " + std::to_string(x) + " of vertex " + std::to_string(v) + " exceeds its factor");
      }
      c += x * strides_[i];
    }
    if (vertex_at_code_[c] != kUnreachable) {
      throw Error(ErrorKind::kInvalidArgument, "vertices " + std::to_string(vertex_at_code_[c]) + " and " + std::to_string(v) + " share coordinates");
    }
    code_of_[v] = c;
    vertex_at_code_[c] = v;
  }
}

Coordinatization Coordinatization::row_major(std::vector<std::uint32_t> radices, VertexId root) {
  const std::size_t k = radices.size();
  const std::uint64_t n = grid_size(radices);
  std::vector<std::uint32_t> table(n * k);
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint64_t rest = v;
    for (std::size_t i = k; i-- > 0;) {
      table[v * k + i] = static_cast<std::uint32_t>(rest % radices[i]);
      rest /= radices[i];
    }
  }
  return Coordinatization(std::move(radices), std::move(table), root);
}

std::uint64_t Coordinatization::code(std::span<const std::uint32_t> c) const noexcept {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) out += c[i] * strides_[i];
  return out;
}

VertexId Coordinatization::vertex_at(std::span<const std::uint32_t> c) const {
  if (c.size() != radices_.size()) throw Error(ErrorKind::kOutOfRange, "coordinate vector has wrong length");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= radices_[i]) throw Error(ErrorKind::kOutOfRange, "coordinate out of range");
  }
  return vertex_at_code_[code(c)];
}

std::vector<CoordVector> Coordinatization::table() const {
  std::vector<CoordVector> out(num_vertices());
  for (VertexId v = 0; v < out.size(); ++v) {
    auto c = coords(v);
    out[v].assign(c.begin(), c.end());
  }
  return out;
}

Product cartesian_product(std::span<const DiGraph> factors) {
  if (factors.empty()) throw Error(ErrorKind::kInvalidArgument, "empty factor list");
  std::vector<std::uint32_t> radices;
  for (const DiGraph& f : factors) radices.push_back(static_cast<std::uint32_t>(f.num_vertices()));
  Coordinatization coords = Coordinatization::row_major(radices);
  const std::size_t n = coords.num_vertices();

  std::vector<Arc> arcs;
  std::vector<VertexId> loops;
  for (VertexId x = 0; x < n; ++x) {
    const auto c = coords.coords(x);
    bool looped = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      looped = looped || factors[i].is_looped(c[i]);
      for (const auto& [a, b] : factors[i].out_arcs(c[i])) {
        arcs.emplace_back(x, static_cast<VertexId>(x + (std::int64_t{b} - a) * static_cast<std::int64_t>(coords.stride(i))));
      }
    }
    if (looped) loops.push_back(x);
  }
  return Product{DiGraph(n, std::move(arcs), std::move(loops)), std::move(coords)};
}

CoordVector project_vertex(std::span<const std::uint32_t> v, std::span<const std::size_t> keep,
                           std::span<const std::uint32_t> root) {
  if (v.size() != root.size()) throw Error(ErrorKind::kInvalidArgument, "coordinate vectors differ in length");
  CoordVector out(root.begin(), root.end());
  for (std::size_t i : keep) {
    if (i >= v.size()) throw Error(ErrorKind::kOutOfRange, "coordinate position out of range");
    out[i] = v[i];
  }
  return out;
}

bool consistent_direction(const DiGraph& g, VertexId v, VertexId u, VertexId v2, VertexId u2) {
  const std::size_t n = g.num_vertices();
  if (v >= n || u >= n || v2 >= n || u2 >= n) throw Error(ErrorKind::kOutOfRange, "vertex out of range");
  const auto is_edge = [&](VertexId a, VertexId b) { return a != b && (g.has_arc(a, b) || g.has_arc(b, a)); };
  if (!is_edge(v, u) || !is_edge(v2, u2)) throw Error(ErrorKind::kInvalidArgument, "pair is not a shadow edge");
  return g.has_arc(v, u) == g.has_arc(v2, u2) && g.has_arc(u, v) == g.has_arc(u2, v2);
}

Layer unit_layer(const DiGraph& g, const Coordinatization& coords, std::span<const std::size_t> positions) {
  if (coords.num_vertices() != g.num_vertices()) throw Error(ErrorKind::kInvalidArgument, "coordinatization does not match graph");
  const std::size_t k = coords.num_factors();
  std::vector<std::uint8_t> in_class(k, 0);
  for (std::size_t p : positions) {
    if (p >= k) throw Error(ErrorKind::kOutOfRange, "unknown factor position " + std::to_string(p));
    in_class[p] = 1;
  }
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) {
    if (in_class[i]) pos.push_back(i);
  }

  // Odometer over the class coordinates, everything else pinned to the root.
  const auto root = coords.coords(coords.root());
  std::vector<std::uint32_t> digit(pos.size(), 0);
  std::uint64_t base = coords.code_of(coords.root());
  for (std::size_t j = 0; j < pos.size(); ++j) base -= root[pos[j]] * coords.stride(pos[j]);
  std::vector<VertexId> members;
  for (;;) {
    std::uint64_t c = base;
    for (std::size_t j = 0; j < pos.size(); ++j) c += digit[j] * coords.stride(pos[j]);
    members.push_back(coords.vertex_at_code(c));
    std::size_t j = 0;
    while (j < pos.size() && ++digit[j] == coords.radices()[pos[j]]) digit[j++] = 0;
    if (j == pos.size()) break;
  }
  std::sort(members.begin(), members.end());

  std::vector<std::uint32_t> local(g.num_vertices(), kUnreachable);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::uint32_t>(i);
  std::vector<Arc> arcs;
  std::vector<VertexId> loops;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& [a, b] : g.out_arcs(members[i])) {
      if (local[b] != kUnreachable) arcs.emplace_back(static_cast<VertexId>(i), local[b]);
    }
    if (g.is_looped(members[i])) loops.push_back(static_cast<VertexId>(i));
  }
  return Layer{DiGraph(members.size(), std::move(arcs), std::move(loops)), std::move(members)};
}

VertexId product_square(const ShadowGraph& s, std::span<const std::uint32_t> colors, VertexId v, VertexId u, VertexId w) {
  if (colors.size() != s.num_edges()) throw Error(ErrorKind::kInvalidArgument, "coloring does not match graph");
  const auto vu = s.find_edge(v, u);
  const auto vw = s.find_edge(v, w);
  if (!vu || !vw) throw Error(ErrorKind::kInvalidArgument, "vu and vw must be edges");
  if (colors[*vu] == colors[*vw]) throw Error(ErrorKind::kInvalidArgument, "vu and vw must have different colors");
  if (s.adjacent(u, w)) throw Error(ErrorKind::kInvalidColoring, "u and w are adjacent; no chordless square");

  std::optional<VertexId> found;
  for (const Incidence& ux : s.neighbors(u)) {
    const VertexId x = ux.neighbor;
    if (x == v || s.adjacent(x, v)) continue;
    const auto wx = s.find_edge(w, x);
    if (!wx || colors[ux.edge] != colors[*vw] || colors[*wx] != colors[*vu]) continue;
    if (found) throw Error(ErrorKind::kInvalidColoring, "product square is not unique");
    found = x;
  }
  if (!found) throw Error(ErrorKind::kInvalidColoring, "no product square through the given edges");
  return *found;
}

}  // namespace cartfact
