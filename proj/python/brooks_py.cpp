#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brooks/checking.hpp"
#include "brooks/chooser.hpp"
#include "brooks/formats.hpp"
#include "brooks/fuzz.hpp"
#include "brooks/instances.hpp"

namespace py = pybind11;

namespace {

using brooks::Color;
using brooks::Graph;
using brooks::ListAssignment;
using RawLists = std::vector<std::vector<Color>>;

py::dict counters_dict(const brooks::TraceCounters& counters) {
  py::dict d;
  for (const auto& [name, value] : counters.entries()) d[py::str(std::string(name))] = value;
  return d;
}

py::dict color(const Graph& g, const RawLists& lists) {
  const auto result = brooks::list_color(g, ListAssignment(lists));
  py::dict out;
  out["counters"] = counters_dict(result.counters);
  if (const auto* ok = std::get_if<brooks::Success>(&result.outcome)) {
    out["status"] = "success";
    out["coloring"] = ok->coloring;
  } else if (const auto* bad = std::get_if<brooks::Infeasible>(&result.outcome)) {
    out["status"] = "infeasible";
    out["reason"] = bad->witness;
    out["component"] = bad->component;
  } else {
    const auto& na = std::get<brooks::NotApplicable>(result.outcome);
    out["status"] = "not-applicable";
    out["reason"] = std::string(brooks::to_string(na.reason));
    out["component"] = na.component;
  }
  return out;
}

std::vector<std::string> verify(const Graph& g, const RawLists& lists, const brooks::PartialColoring& f) {
  std::vector<std::string> out;
  for (const auto& v : brooks::verify_coloring(g, ListAssignment(lists), f)) out.push_back(brooks::describe(v));
  return out;
}

py::tuple exact(const Graph& g, const RawLists& lists, std::uint64_t node_limit) {
  const auto r = brooks::solve_exact(g, ListAssignment(lists), node_limit);
  switch (r.status) {
    case brooks::ExactStatus::found: return py::make_tuple("found", r.coloring);
    case brooks::ExactStatus::infeasible: return py::make_tuple("infeasible", py::none());
    case brooks::ExactStatus::limit_exceeded: break;
  }
  return py::make_tuple("limit-exceeded", py::none());
}

py::dict fuzz(std::uint64_t trials, brooks::Seed seed, std::size_t nmax, std::size_t oracle_nmax) {
  const auto report = brooks::run_fuzz({trials, seed, nmax, oracle_nmax, brooks::Fault::none});
  py::dict out;
  out["passed"] = report.passed();
  out["trials"] = report.trials;
  out["success"] = report.successes;
  out["infeasible"] = report.infeasible;
  out["not_applicable"] = report.not_applicable;
  out["oracle_checked"] = report.oracle_checked;
  out["oracle_infeasible"] = report.oracle_infeasible;
  out["failures"] = report.failure_count;
  out["counters"] = counters_dict(report.counters);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "List coloring from lists of max-degree size";

  py::register_exception<brooks::GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<brooks::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<brooks::GeneratorError>(m, "GeneratorError", PyExc_ValueError);
  py::register_exception<brooks::InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const brooks::EdgeList& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = brooks::EdgeList{})
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors", [](const Graph& g, brooks::Vertex v) {
        const auto s = g.neighbors(v);
        return std::vector<brooks::Vertex>(s.begin(), s.end());
      })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<brooks.Graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("connected_components", &brooks::connected_components);
  m.def("max_degree", &brooks::max_degree);

  m.def("list_color", &color, py::arg("graph"), py::arg("lists"),
        "Returns a dict with 'status' and either 'coloring' or 'reason'/'component', plus branch counters.");
  m.def("verify_coloring", &verify, py::arg("graph"), py::arg("lists"), py::arg("coloring"));
  m.def("solve_exact", &exact, py::arg("graph"), py::arg("lists"), py::arg("node_limit") = brooks::kDefaultNodeLimit);

  m.def("gen_named", [](const std::string& kind, std::size_t n) { return brooks::gen_named(brooks::parse_named_kind(kind), n); },
        py::arg("kind"), py::arg("n") = 0);
  m.def("gen_random_regular", &brooks::gen_random_regular, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("gen_random_connected", &brooks::gen_random_connected, py::arg("n"), py::arg("dmax"), py::arg("seed"));
  m.def("gen_lists",
        [](const Graph& g, std::size_t size, std::size_t palette, brooks::Seed seed) {
          return brooks::gen_lists(g, size, palette, seed).lists();
        },
        py::arg("graph"), py::arg("size"), py::arg("palette"), py::arg("seed"));

  m.def("parse_graph", &brooks::parse_graph);
  m.def("emit_graph", &brooks::emit_graph);
  m.def("parse_lists", [](std::string_view text, std::size_t n) { return brooks::parse_lists(text, n).lists(); });
  m.def("emit_lists", [](const RawLists& lists) { return brooks::emit_lists(ListAssignment(lists)); });

  m.def("run_fuzz", &fuzz, py::arg("trials"), py::arg("seed"), py::arg("nmax") = 60, py::arg("oracle_nmax") = 9);
}
