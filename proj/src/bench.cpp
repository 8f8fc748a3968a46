#include "cartfact/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "cartfact/directed_factor.hpp"
#include "cartfact/error.hpp"
#include "cartfact/loop_factor.hpp"
#include "cartfact/oracle.hpp"
#include "cartfact/product.hpp"

namespace cartfact {

namespace {

DiGraph directed_four_cycle() { return DiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// Each edge of the path or cycle gets a random orientation, one of three.
DiGraph oriented_path(std::mt19937_64& rng, std::size_t length, bool close_cycle, double loop_probability) {
  std::vector<Arc> arcs;
  const std::size_t edges = close_cycle ? length : length - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    const auto u = static_cast<VertexId>(i);
    const auto v = static_cast<VertexId>((i + 1) % length);
    switch (rng() % 3) {
      case 0: arcs.emplace_back(u, v); break;
      case 1: arcs.emplace_back(v, u); break;
      default:
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
  }
  std::vector<VertexId> loops;
  for (VertexId v = 1; v < length; ++v) {
    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < loop_probability) loops.push_back(v);
  }
  return DiGraph(length, std::move(arcs), std::move(loops));
}

VertexId first_unlooped(const DiGraph& g) {
  VertexId v = 0;
  while (v < g.num_vertices() && g.is_looped(v)) ++v;
  if (v == g.num_vertices()) throw Error(ErrorKind::kNoUnloopedVertex, "bench factor has no unlooped vertex");
  return v;
}

BenchInstance assemble(std::vector<DiGraph> factors) {
  std::vector<ShadowGraph> part_shadows;
  std::vector<ShadowFactorization> parts;
  for (const DiGraph& f : factors) {
    part_shadows.push_back(shadow(f));
    parts.push_back(factor_shadow(part_shadows.back(), first_unlooped(f)));
  }
  Product p = cartesian_product(factors);
  ShadowGraph s = shadow(p.graph);
  ShadowFactorization sf = compose_factorizations(p, s, part_shadows, parts);
  DiGraph loopless = strip_loops(p.graph);
  return BenchInstance{std::move(p.graph), std::move(loopless), std::move(s), std::move(sf)};
}

}  // namespace

std::optional<BenchFamily> parse_bench_family(std::string_view name) {
  if (name == "grid") return BenchFamily::kGrid;
  if (name == "cube") return BenchFamily::kCube;
  if (name == "randprod") return BenchFamily::kRandomProduct;
  return std::nullopt;
}

std::string_view to_string(BenchFamily family) noexcept {
  switch (family) {
    case BenchFamily::kGrid: return "grid";
    case BenchFamily::kCube: return "cube";
    case BenchFamily::kRandomProduct: return "randprod";
  }
  return "unknown";
}

BenchInstance make_bench_instance(BenchFamily family, std::size_t scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DiGraph> factors;
  switch (family) {
    case BenchFamily::kGrid: {
      const auto side = static_cast<std::size_t>(std::lround(8.0 * std::pow(2.0, scale / 2.0)));
      factors.push_back(oriented_path(rng, side, false, 0.0));
      factors.push_back(oriented_path(rng, side, true, 0.0));
      factors.push_back(directed_four_cycle());
      break;
    }
    case BenchFamily::kCube: {
      std::size_t dims = scale + 4;
      for (std::size_t i = 0; dims > 0; ++i) {
        if (i % 2 == 0 && dims >= 2) {
          factors.push_back(directed_four_cycle());
          dims -= 2;
        } else {
          factors.push_back(rng() % 2 ? DiGraph(2, {{0, 1}}) : DiGraph(2, {{0, 1}, {1, 0}}));
          dims -= 1;
        }
      }
      break;
    }
    case BenchFamily::kRandomProduct: {
      for (int i = 0; i < 3; ++i) factors.push_back(random_prime_factor(rng, 3 + rng() % 3, 0.4, 0.3));
      factors.push_back(oriented_path(rng, std::size_t{2} << scale, false, 0.3));
      break;
    }
  }
  return assemble(std::move(factors));
}

double time_factoring(const BenchInstance& instance, std::size_t batch) {
  using Clock = std::chrono::steady_clock;
  const ShadowFactorization& sf = instance.factorization;
  std::size_t sink = 0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < batch; ++i) {
    const BfsOrder order = bfs(instance.shadow, sf.root);
    DirectedFactorization f = factor_directed(instance.loopless, instance.shadow, sf, order);
    if (instance.graph.num_loops() != 0) f = factor_with_loops(instance.graph, instance.shadow, sf, order, f);
    sink += f.factors.size();
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (sink == 0 && instance.graph.num_vertices() > 1) throw std::logic_error("factoring produced no factors");
  return elapsed / static_cast<double>(batch);
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.repetitions == 0 || options.min_arcs > options.max_arcs) throw Error(ErrorKind::kInvalidArgument, "bad bench range");
  std::vector<BenchRow> rows;
  for (std::size_t scale = 0;; ++scale) {
    const BenchInstance instance = make_bench_instance(options.family, scale, options.seed);
    const std::size_t arcs = instance.size();
    if (arcs > options.max_arcs) break;
    if (arcs < options.min_arcs) continue;

    const double once = time_factoring(instance, 1);
    const auto batch = static_cast<std::size_t>(std::max(1.0, std::ceil(options.min_batch_seconds / std::max(once, 1e-9))));
    std::vector<double> samples;
    for (std::size_t r = 0; r < options.repetitions; ++r) samples.push_back(time_factoring(instance, batch));
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    const double median = samples[samples.size() / 2];
    rows.push_back(BenchRow{arcs, median, median / static_cast<double>(arcs)});
  }
  return rows;
}

double linearity_ratio(std::span<const BenchRow> rows) {
  if (rows.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return a.seconds_per_arc < b.seconds_per_arc;
  });
  return hi->seconds_per_arc / lo->seconds_per_arc;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << "arcs,seconds,seconds_per_arc\n";
  out.precision(6);
  for (const BenchRow& r : rows) out << r.arcs << ',' << std::scientific << r.seconds << ',' << r.seconds_per_arc << std::defaultfloat << '\n';
  return out.str();
}

}  // namespace cartfact
