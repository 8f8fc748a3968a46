// Command-line front end.
//
// Exit codes: 0 success, 1 usage or other error, 2 parse error,
// 3 disconnected graph, 4 no unlooped vertex, 5 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cartfact/bench.hpp"
#include "cartfact/error.hpp"
#include "cartfact/graph_io.hpp"
#include "cartfact/loop_factor.hpp"
#include "cartfact/oracle.hpp"
#include "cartfact/product.hpp"

namespace cf = cartfact;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitNoUnlooped = 4;
constexpr int kExitVerify = 5;

int exit_code(cf::ErrorKind kind) {
  switch (kind) {
    case cf::ErrorKind::kParse: return kExitParse;
    case cf::ErrorKind::kDisconnected: return kExitDisconnected;
    case cf::ErrorKind::kNoUnloopedVertex: return kExitNoUnlooped;
    default: return kExitOther;
  }
}

// Any failure while reading an input file is a parse error.
cf::GraphDocument load(const std::string& path) {
  try {
    return cf::parse_graph_document(cf::read_text_file(path));
  } catch (const cf::Error& e) {
    throw cf::Error(cf::ErrorKind::kParse, path + ": " + e.what());
  }
}

std::vector<cf::DiGraph> load_graphs(const std::vector<std::string>& paths) {
  std::vector<cf::DiGraph> out;
  for (const auto& p : paths) out.push_back(load(p).graph);
  return out;
}

std::vector<cf::CoordVector> load_coordinates(const std::string& path, std::size_t num_vertices) {
  cf::GraphDocument doc = load(path);
  if (doc.coordinates.size() != num_vertices) {
    throw cf::Error(cf::ErrorKind::kParse, path + ": coordinate table must cover " + std::to_string(num_vertices) + " vertices");
  }
  return std::move(doc.coordinates);
}

void print_kv(const std::string& key, const std::string& value) { std::cout << key << ": " << value << '\n'; }
void print_kv(const std::string& key, std::size_t value) { print_kv(key, std::to_string(value)); }
void print_seconds(const std::string& key, double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  print_kv(key, buf);
}

struct FactorArgs {
  std::string input;
  bool emit_coords = false;
  bool emit_colors = false;
  bool verify = false;
  std::optional<cf::VertexId> root;
};

int cmd_factor(const FactorArgs& args) {
  const cf::DiGraph g = load(args.input).graph;
  cf::PipelineOptions options;
  options.root = args.root;
  cf::PipelineReport report;
  const cf::DirectedFactorization f = cf::factor_full(g, options, &report);

  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    cf::write_text_file(args.input + ".factor" + std::to_string(i), cf::serialize_graph(f.factors[i]));
  }
  if (args.emit_coords) {
    cf::write_text_file(args.input + ".coords", cf::serialize_graph(g) + cf::serialize_coordinates(f.coords.table()));
  }
  if (args.emit_colors) {
    const cf::ShadowGraph s = cf::shadow(g);
    std::vector<cf::ColoredEdge> colors;
    for (const cf::ShadowEdge& e : s.edges()) {
      std::uint32_t i = 0;
      while (f.coords.coord(e.u, i) == f.coords.coord(e.v, i)) ++i;
      colors.push_back(cf::ColoredEdge{e.u, e.v, i});
    }
    cf::write_text_file(args.input + ".colors", cf::serialize_graph(g) + cf::serialize_colors(colors));
  }

  std::string sizes;
  for (const cf::DiGraph& x : f.factors) sizes += (sizes.empty() ? "" : " ") + std::to_string(x.num_vertices());
  print_kv("vertices", g.num_vertices());
  print_kv("arcs", g.num_arcs());
  print_kv("loops", g.num_loops());
  print_kv("root", report.root);
  print_kv("shadow_factors", report.shadow_factors);
  print_kv("factors", f.factors.size());
  print_kv("factor_sizes", sizes);
  print_kv("directed_merges", f.directed_merges);
  print_kv("loop_merges", f.loop_merges);
  print_seconds("shadow_seconds", report.shadow_seconds);
  print_seconds("directed_seconds", report.directed_seconds);
  print_seconds("loops_seconds", report.loops_seconds);
  if (args.verify) {
    const bool ok = cf::reconstruct_check(g, f);
    print_kv("verified", ok ? "yes" : "no");
    if (!ok) return kExitVerify;
  }
  return kExitOk;
}

struct ProductArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::string coords;
};

int cmd_product(const ProductArgs& args) {
  const std::vector<cf::DiGraph> factors = load_graphs(args.inputs);
  cf::Product p = cf::cartesian_product(factors);
  cf::DiGraph g = std::move(p.graph);
  if (!args.coords.empty()) {
    // Vertex v of the output is the product vertex with coordinates table[v].
    const auto table = load_coordinates(args.coords, g.num_vertices());
    std::vector<cf::VertexId> perm(g.num_vertices());
    std::vector<std::uint8_t> hit(g.num_vertices(), 0);
    for (cf::VertexId v = 0; v < table.size(); ++v) {
      const cf::VertexId x = p.coords.vertex_at(table[v]);
      if (hit[x]++) throw cf::Error(cf::ErrorKind::kInvalidArgument, "coordinate table is not a bijection");
      perm[x] = v;
    }
    g = cf::relabel(g, perm);
  }
  const std::string text = cf::serialize_graph(g);
  if (args.output.empty()) {
    std::cout << text;
  } else {
    cf::write_text_file(args.output, text);
  }
  return kExitOk;
}

struct GenerateArgs {
  std::size_t factors = 2;
  std::size_t min_size = 2;
  std::size_t max_size = 4;
  double loops = 0.0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_generate(const GenerateArgs& args) {
  cf::GeneratorParams params;
  params.num_factors = args.factors;
  params.min_size = args.min_size;
  params.max_size = args.max_size;
  params.loop_probability = args.loops;
  params.seed = args.seed;
  const cf::ProductInstance inst = cf::gen_product_instance(params);
  cf::write_text_file(args.output, cf::serialize_graph(inst.graph));
  for (std::size_t i = 0; i < inst.factors.size(); ++i) {
    cf::write_text_file(args.output + ".truth" + std::to_string(i), cf::serialize_graph(inst.factors[i]));
  }
  print_kv("vertices", inst.graph.num_vertices());
  print_kv("arcs", inst.graph.num_arcs());
  print_kv("loops", inst.graph.num_loops());
  print_kv("factors", inst.factors.size());
  return kExitOk;
}

struct VerifyArgs {
  std::string graph;
  std::vector<std::string> factors;
  std::string coords;
};

int cmd_verify(const VerifyArgs& args) {
  const cf::DiGraph g = load(args.graph).graph;
  const std::vector<cf::DiGraph> factors = load_graphs(args.factors);
  const auto table = load_coordinates(args.coords, g.num_vertices());
  bool ok = false;
  try {
    ok = cf::reconstruct_check(g, factors, table);
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  print_kv("verified", ok ? "yes" : "no");
  return ok ? kExitOk : kExitVerify;
}

struct BenchArgs {
  std::string family = "cube";
  std::size_t min_arcs = 1000;
  std::size_t max_arcs = 1000000;
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
  std::string csv;
};

int cmd_bench(const BenchArgs& args) {
  cf::BenchOptions options;
  const auto family = cf::parse_bench_family(args.family);
  if (!family) throw cf::Error(cf::ErrorKind::kInvalidArgument, "unknown family " + args.family);
  options.family = *family;
  options.min_arcs = args.min_arcs;
  options.max_arcs = args.max_arcs;
  options.repetitions = args.repetitions;
  options.seed = args.seed;
  const auto rows = cf::run_bench(options);
  const std::string csv = cf::bench_csv(rows);
  if (args.csv.empty()) {
    std::cout << csv;
  } else {
    cf::write_text_file(args.csv, csv);
  }
  print_kv("family", std::string(cf::to_string(options.family)));
  print_kv("sizes", rows.size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", cf::linearity_ratio(rows));
  print_kv("linearity_ratio", buf);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime factorization of directed graphs with loops under the Cartesian product"};
  app.require_subcommand(1);

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "Factor a graph file into <input>.factor<i> files");
  factor_cmd->add_option("--input", factor.input, "Graph file")->required();
  factor_cmd->add_flag("--emit-coords", factor.emit_coords, "Write <input>.coords");
  factor_cmd->add_flag("--emit-colors", factor.emit_colors, "Write <input>.colors");
  factor_cmd->add_flag("--verify", factor.verify, "Check the product of the factors against the input");
  factor_cmd->add_option("--root", factor.root, "Unlooped root vertex");

  ProductArgs product;
  auto* product_cmd = app.add_subcommand("product", "Cartesian product of graph files");
  product_cmd->add_option("inputs", product.inputs, "Factor files")->required();
  product_cmd->add_option("-o,--output", product.output, "Output file (default stdout)");
  product_cmd->add_option("--coords", product.coords, "Coordinate table naming the output vertices");

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Random product of prime factors, scrambled");
  generate_cmd->add_option("--factors", generate.factors, "Number of factors")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--min", generate.min_size, "Smallest factor size")->check(CLI::Range(2, 1 << 20));
  generate_cmd->add_option("--max", generate.max_size, "Largest factor size")->check(CLI::Range(2, 1 << 20));
  generate_cmd->add_option("--loops", generate.loops, "Loop probability")->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--seed", generate.seed, "Random seed");
  generate_cmd->add_option("-o,--output", generate.output, "Output file; factors go to <output>.truth<i>")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a factorization against a graph");
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  verify_cmd->add_option("factors", verify.factors, "Factor files")->required();
  verify_cmd->add_option("--coords", verify.coords, "File with the coordinate table")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the loopless and loop passes over a product family");
  bench_cmd->add_option("--family", bench.family, "grid, cube or randprod")->check(CLI::IsMember({"grid", "cube", "randprod"}));
  bench_cmd->add_option("--min-arcs", bench.min_arcs, "Smallest instance");
  bench_cmd->add_option("--max-arcs", bench.max_arcs, "Largest instance");
  bench_cmd->add_option("--repetitions", bench.repetitions, "Measurements per size (median reported)")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Random seed");
  bench_cmd->add_option("--emit-csv", bench.csv, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitOther;
  }

  try {
    if (*factor_cmd) return cmd_factor(factor);
    if (*product_cmd) return cmd_product(product);
    if (*generate_cmd) return cmd_generate(generate);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
