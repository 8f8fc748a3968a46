#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cartfact/graph.hpp"
#include "cartfact/shadow_factor.hpp"

namespace cartfact {

enum class BenchFamily { kGrid, kCube, kRandomProduct };

std::optional<BenchFamily> parse_bench_family(std::string_view name);
std::string_view to_string(BenchFamily family) noexcept;

/// A product graph with the prime factorization of its shadow already known.
/// The shadow factorization is assembled from the factors, so building an
/// instance never factors the large graph itself.
struct BenchInstance {
  DiGraph graph;
  DiGraph loopless;
  ShadowGraph shadow;
  ShadowFactorization factorization;

  std::size_t size() const noexcept { return graph.num_arcs() + graph.num_loops(); }
};

/// Families (scale grows the instance roughly geometrically):
///   grid  - randomly oriented path x randomly oriented cycle x directed 4-cycle
///   cube  - hypercube whose dimensions alternate between directed 4-cycles and
///           randomly oriented K2
///   randprod - three random prime factors with loops x a looped directed path
BenchInstance make_bench_instance(BenchFamily family, std::size_t scale, std::uint64_t seed);

struct BenchOptions {
  BenchFamily family = BenchFamily::kCube;
  std::size_t min_arcs = 1000;
  std::size_t max_arcs = 1000000;
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
  /// Short runs are batched until one measurement lasts at least this long.
  double min_batch_seconds = 0.02;
};

struct BenchRow {
  std::size_t arcs = 0;
  double seconds = 0;
  double seconds_per_arc = 0;
};

/// Seconds for one loopless + loop factoring pass over a prepared instance.
double time_factoring(const BenchInstance& instance, std::size_t batch);

/// One row per instance size in [min_arcs, max_arcs], median of `repetitions`.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// max(seconds_per_arc) / min(seconds_per_arc).
double linearity_ratio(std::span<const BenchRow> rows);

/// Header `arcs,seconds,seconds_per_arc` plus one line per row.
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace cartfact
