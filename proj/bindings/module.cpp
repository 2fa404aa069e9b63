// Python bindings for the chromagraph core.

#include "chromagraph/bcc.hpp"
#include "chromagraph/csf.hpp"
#include "chromagraph/graph.hpp"
#include "chromagraph/graphpoly.hpp"
#include "chromagraph/io.hpp"
#include "chromagraph/partition.hpp"
#include "chromagraph/rational.hpp"
#include "chromagraph/symfun.hpp"
#include "chromagraph/unipoly.hpp"
#include "chromagraph/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace chromagraph;

namespace {

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions")
      .attr("Fraction")(rational_to_string(r));
}

Rational rational_from_object(const py::handle& obj) {
  return rational_from_string(py::str(obj).cast<std::string>());
}

py::object to_py_int(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::list poly_to_list(const UniPoly& p) {
  py::list out;
  for (int k = 0; k <= p.degree(); ++k) out.append(to_fraction(p.coeff(k)));
  return out;
}

UniPoly poly_from_list(const py::sequence& coeffs) {
  std::vector<Rational> c;
  for (const py::handle& v : coeffs) c.push_back(rational_from_object(v));
  return UniPoly(std::move(c));
}

py::dict symfun_to_dict(const SymFun& f) {
  py::dict out;
  for (const auto& [part, c] : f.coeffs())
    out[py::tuple(py::cast(part.parts()))] = to_fraction(c);
  return out;
}

SymFun symfun_from_dict(const py::dict& d) {
  SymFun f;
  for (const auto& [key, value] : d) {
    std::vector<int> parts;
    for (const py::handle& p : key.cast<py::tuple>())
      parts.push_back(p.cast<int>());
    f.add_term(Partition(std::move(parts)), rational_from_object(value));
  }
  return f;
}

BasisRegistry& shared_registry() {
  static BasisRegistry registry;
  return registry;
}

std::optional<BasisId> resolve_basis(const std::string& name, int degree) {
  if (name == "p") return std::nullopt;
  GraphFamily family;
  if (name == "path")
    family = GraphFamily::paths();
  else if (name == "star")
    family = GraphFamily::stars();
  else
    throw std::invalid_argument("basis must be p, path, or star");
  return shared_registry().register_chromatic_basis(family, degree);
}

py::dict csf_py(const WeightedGraph& g, const std::string& basis) {
  SymFun f = csf_deletion_contraction(g);
  if (const auto id = resolve_basis(basis, g.total_weight()))
    f = shared_registry().change_basis(f, *id);
  return symfun_to_dict(f);
}

py::object report_py(const SuiteReport& report) {
  return py::module_::import("json").attr("loads")(
      report_to_json(report).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact chromatic symmetric functions, chromatic and tree polynomials "
      "of vertex-weighted graphs.\n\n"
      "Symmetric functions are dicts mapping partition tuples to Fractions; "
      "polynomials are coefficient lists, constant term first.";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("has_edge", &Graph::has_edge)
      .def("__eq__",
           [](const Graph& a, const Graph& b) { return a == b; })
      .def("__hash__",
           [](const Graph& g) { return py::hash(py::str(g.canonical_key())); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + graph_to_json(WeightedGraph(g)).dump() + ")";
      });

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init<Graph>(), py::arg("graph"))
      .def(py::init<Graph, std::vector<int>>(), py::arg("graph"),
           py::arg("weights"))
      .def_property_readonly("graph", &WeightedGraph::graph)
      .def_property_readonly("weights",
                             [](const WeightedGraph& g) { return g.weights(); })
      .def_property_readonly("total_weight", &WeightedGraph::total_weight)
      .def_property_readonly("excess_weight", &WeightedGraph::excess_weight)
      .def("__eq__", [](const WeightedGraph& a,
                        const WeightedGraph& b) { return a == b; })
      .def("__repr__", [](const WeightedGraph& g) {
        return "WeightedGraph(" + graph_to_json(g).dump() + ")";
      });
  py::implicitly_convertible<Graph, WeightedGraph>();

  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("delete_edge",
        py::overload_cast<const WeightedGraph&, int>(&delete_edge),
        py::arg("graph"), py::arg("edge_index"));
  m.def("contract_edge",
        py::overload_cast<const WeightedGraph&, int>(&contract_edge),
        py::arg("graph"), py::arg("edge_index"),
        "Merge the endpoints; the merged vertex carries the weight sum.");

  m.def("partitions_of",
        [](int n) {
          py::list out;
          for (const Partition& p : partitions_of(n))
            out.append(py::tuple(py::cast(p.parts())));
          return out;
        },
        py::arg("n"));

  m.def("csf", &csf_py, py::arg("graph"), py::arg("basis") = "p",
        "Chromatic symmetric function as {partition tuple: Fraction}, "
        "expanded over the power-sum basis or a registered tree family.");
  m.def("collapse",
        [](const py::dict& f) {
          return poly_to_list(collapse_by_length(symfun_from_dict(f)));
        },
        py::arg("coeffs"),
        "Replace every basis element by x^(number of parts).");
  m.def("chromatic_poly",
        [](const WeightedGraph& g) {
          return poly_to_list(chromatic_poly_weighted(g));
        },
        py::arg("graph"));
  m.def("tree_poly",
        [](const WeightedGraph& g) { return poly_to_list(tree_poly_weighted(g)); },
        py::arg("graph"));
  m.def("mobius_substitute",
        [](const py::sequence& coeffs, int N) {
          return poly_to_list(mobius_substitute(poly_from_list(coeffs), N));
        },
        py::arg("coeffs"), py::arg("total_weight"),
        "The involution (x-1)^N p(x/(x-1)) swapping the chromatic and tree "
        "polynomials of a graph with the given total weight.");

  m.def("bcc_members",
        [](const Graph& g) {
          py::list out;
          for (EdgeSubset s : bcc_members(g).members)
            out.append(edge_subset_indices(s));
          return out;
        },
        py::arg("graph"),
        "Edge-index lists of the broken-circuit-free edge sets.");
  m.def("maximal_members",
        [](const Graph& g) {
          py::list out;
          for (EdgeSubset s : maximal_members(g))
            out.append(edge_subset_indices(s));
          return out;
        },
        py::arg("graph"));
  m.def("cutset_forest_pairs",
        [](const Graph& g, int k) {
          py::list out;
          for (const auto& [cut, forest] : cutset_forest_pairs(g, k))
            out.append(py::make_tuple(edge_subset_indices(cut),
                                      edge_subset_indices(forest)));
          return out;
        },
        py::arg("graph"), py::arg("k"));
  m.def("signed_forest_colouring_eval",
        [](const Graph& g, int x) {
          return to_py_int(signed_forest_colouring_eval(g, x));
        },
        py::arg("graph"), py::arg("x"),
        "Signed proper-colouring count over the complex; equals the tree "
        "polynomial at x.");

  m.def("verify",
        [](int max_n, bool weights,
           const std::optional<std::vector<std::string>>& only) {
          SuiteOptions opt;
          opt.n_max = max_n;
          opt.include_weighted = weights;
          const SuiteReport report =
              only ? run_suite(opt, *only) : run_suite(opt);
          return report_py(report);
        },
        py::arg("max_n") = 4, py::arg("weights") = false,
        py::arg("only") = py::none(),
        "Run the identity suite over all small graphs; returns the report "
        "as plain dicts and lists.");
}
