#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cartfact/error.hpp"
#include "cartfact/graph_io.hpp"
#include "cartfact/loop_factor.hpp"
#include "cartfact/oracle.hpp"
#include "cartfact/product.hpp"

namespace py = pybind11;
namespace cf = cartfact;

namespace {

cf::DiGraph make_graph(std::size_t n, std::vector<cf::Arc> arcs, std::vector<cf::VertexId> loops) {
  return cf::DiGraph(n, std::move(arcs), std::move(loops));
}

std::vector<cf::Arc> arcs_of(const cf::DiGraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

py::dict factor(const cf::DiGraph& g, std::optional<cf::VertexId> root) {
  cf::PipelineOptions options;
  options.root = root;
  cf::PipelineReport report;
  const cf::DirectedFactorization f = cf::factor_full(g, options, &report);
  py::dict out;
  out["factors"] = f.factors;
  out["coordinates"] = f.coords.table();
  out["root"] = report.root;
  out["shadow_factors"] = report.shadow_factors;
  out["directed_merges"] = f.directed_merges;
  out["loop_merges"] = f.loop_merges;
  out["verified"] = cf::reconstruct_check(g, f);
  return out;
}

py::tuple product(const std::vector<cf::DiGraph>& factors) {
  cf::Product p = cf::cartesian_product(factors);
  return py::make_tuple(p.graph, p.coords.table());
}

py::tuple generate(std::size_t num_factors, std::size_t min_size, std::size_t max_size, double loop_probability,
                   std::uint64_t seed) {
  cf::GeneratorParams params;
  params.num_factors = num_factors;
  params.min_size = min_size;
  params.max_size = max_size;
  params.loop_probability = loop_probability;
  params.seed = seed;
  cf::ProductInstance inst = cf::gen_product_instance(params);
  return py::make_tuple(inst.graph, inst.factors);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cartesian prime factorization of directed graphs with loops";

  static py::exception<cf::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cf::Error& e) {
      py::set_error(error, (std::string(cf::to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<cf::DiGraph>(m, "DiGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("arcs") = std::vector<cf::Arc>{},
           py::arg("loops") = std::vector<cf::VertexId>{})
      .def_property_readonly("num_vertices", &cf::DiGraph::num_vertices)
      .def_property_readonly("arcs", &arcs_of)
      .def_property_readonly("loops", &cf::DiGraph::loops)
      .def("has_arc", &cf::DiGraph::has_arc)
      .def("is_looped", &cf::DiGraph::is_looped)
      .def("__eq__", [](const cf::DiGraph& a, const cf::DiGraph& b) { return a == b; })
      .def("__repr__", [](const cf::DiGraph& g) {
        return "DiGraph(n=" + std::to_string(g.num_vertices()) + ", arcs=" + std::to_string(g.num_arcs()) +
               ", loops=" + std::to_string(g.num_loops()) + ")";
      });

  m.def("parse_graph", &cf::parse_graph, py::arg("text"));
  m.def("serialize_graph", &cf::serialize_graph, py::arg("graph"));
  m.def("cartesian_product", &product, py::arg("factors"), "Product graph and its row-major coordinate table");
  m.def("factor", &factor, py::arg("graph"), py::arg("root") = std::nullopt,
        "Prime factors, coordinate table and merge counts of a connected graph");
  m.def("brute_force_prime", [](const cf::DiGraph& g) { return cf::brute_force_prime(g); }, py::arg("graph"));
  m.def("iso_check", [](const cf::DiGraph& a, const cf::DiGraph& b) { return cf::iso_check(a, b); }, py::arg("a"), py::arg("b"));
  m.def("isomorphic_multisets",
        [](const std::vector<cf::DiGraph>& a, const std::vector<cf::DiGraph>& b) { return cf::isomorphic_multisets(a, b); },
        py::arg("a"), py::arg("b"));
  m.def("gen_product_instance", &generate, py::arg("num_factors"), py::arg("min_size") = 2, py::arg("max_size") = 4,
        py::arg("loop_probability") = 0.0, py::arg("seed") = 0, "Scrambled product and its ground-truth factors");
}
