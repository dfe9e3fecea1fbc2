// Python bindings. Exact values cross the boundary as fraction strings so
// nothing is rounded; callers can hand them to Fraction().
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlmult/classify.hpp"
#include "nlmult/families.hpp"
#include "nlmult/structure.hpp"

namespace py = pybind11;
using namespace nlmult;

namespace {

py::dict theta_dict(const ThetaDescriptor& t) {
  py::dict d;
  d["factor"] = t.factor.coeff_strings();
  d["interval"] = py::make_tuple(to_fraction_string(t.interval.lo),
                                 to_fraction_string(t.interval.hi));
  d["mult"] = t.multiplicity;
  d["is_rho1"] = t.is_rho1;
  d["is_rho_n_minus_1"] = t.is_rho_n_minus_1;
  d["equals_one"] = t.equals_one;
  return d;
}

py::dict analysis_dict(const GraphAnalysis& a) {
  py::dict d;
  d["order"] = a.order;
  py::list thetas;
  for (const auto& t : a.thetas) thetas.append(theta_dict(t));
  d["thetas"] = std::move(thetas);
  d["rho_n_minus_1_is_one"] = a.rho_n_minus_1_one;
  d["nu"] = a.nu;
  d["diam"] = a.diam ? py::cast(*a.diam) : py::none().cast<py::object>();
  d["cograph"] = a.cograph;
  d["family"] = a.structural.label();
  return d;
}

py::dict scan_dict(const ScanReport& r) {
  py::dict d;
  d["order"] = r.order;
  d["scanned"] = r.scanned;
  py::list spectral;
  for (const auto& row : r.spectral) {
    py::dict s;
    s["g6"] = row.g6;
    s["theta_factor"] = row.theta_factor.coeff_strings();
    s["mult"] = row.multiplicity;
    s["is_rho1"] = row.is_rho1;
    s["is_rho_n_minus_1"] = row.is_rho_n_minus_1;
    s["equals_one"] = row.equals_one;
    s["nu"] = row.nu;
    s["diam"] = row.diam ? py::cast(*row.diam) : py::none().cast<py::object>();
    s["family"] = row.family;
    spectral.append(std::move(s));
  }
  d["spectral"] = std::move(spectral);
  d["mismatches"] = r.mismatches;
  d["problem_counterexamples"] = r.problem_counterexamples;
  py::list ds;
  for (const auto& row : r.ds) {
    py::dict s;
    s["g6"] = row.g6;
    s["mates"] = row.mates;
    ds.append(std::move(s));
  }
  d["ds"] = std::move(ds);
  d["families"] = r.families;
  d["float_checked"] = r.float_checked;
  return d;
}

}  // namespace

PYBIND11_MODULE(nlmult, m) {
  m.doc() = "exact normalized Laplacian multiplicity engine";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def("order", &Graph::order)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edge_count", &Graph::edge_count)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (int u = 0; u < g.order(); ++u)
               for (int v = u + 1; v < g.order(); ++v)
                 if (g.has_edge(u, v)) out.emplace_back(u, v);
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("write_graph6", &write_graph6);
  m.def("complement", &complement);
  m.def("is_connected", &is_connected);
  m.def("diameter", &diameter);
  m.def("canonical_graph", &canonical_graph);
  m.def("isomorphic", &isomorphic);
  m.def("connected_graphs", &connected_graphs, py::arg("n"));

  m.def("complete_graph", &complete_graph);
  m.def("complete_minus_edge", &complete_minus_edge);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("complete_tripartite", &complete_tripartite);
  m.def("complete_split", &complete_split, py::arg("a"), py::arg("n"));
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);

  m.def("nl_charpoly", [](const Graph& g) { return nl_charpoly(g).coeff_strings(); });
  m.def("eigenvalues", [](const Graph& g) {
    MultiplicityProfile profile = multiplicity_profile(g);
    py::list out;
    for (const auto& ref : sorted_roots(profile)) {
      py::dict d;
      d["interval"] = py::make_tuple(to_fraction_string(ref.interval.lo),
                                     to_fraction_string(ref.interval.hi));
      d["mult"] = ref.multiplicity;
      out.append(std::move(d));
    }
    return out;
  });
  m.def("find_theta", [](const Graph& g) {
    py::list out;
    for (const auto& t : find_theta(g)) out.append(theta_dict(t));
    return out;
  });
  m.def("float_spectrum", &float_spectrum);

  m.def("independence_number", &independence_number);
  m.def("is_cograph", &is_cograph);
  m.def("has_induced_p4", &has_induced_p4);

  m.def(
      "analyze",
      [](const Graph& g) { return analysis_dict(analyze_graph(g, ExceptionalCatalog::builtin())); },
      py::arg("g"));
  m.def(
      "classify",
      [](const Graph& g) {
        return structural_classify(g, ExceptionalCatalog::builtin()).label();
      },
      py::arg("g"));
  m.def(
      "scan_order",
      [](int n, int jobs, bool with_float) {
        ScanOptions opts;
        opts.jobs = jobs;
        opts.want_ds = true;
        opts.want_float = with_float;
        return scan_dict(scan_order(n, opts, ExceptionalCatalog::builtin()));
      },
      py::arg("n"), py::arg("jobs") = 1, py::arg("with_float") = false);
  m.def("lemma_sweep", [](int lo, int hi) {
    LemmaReport r = lemma_sweep(lo, hi);
    py::dict d;
    d["order_lo"] = r.order_lo;
    d["order_hi"] = r.order_hi;
    d["graphs_checked"] = r.graphs_checked;
    d["omega_graphs"] = r.omega_graphs;
    d["embeddings_checked"] = r.embeddings_checked;
    d["violations"] = r.violations;
    return d;
  });
  m.def("exceptional_catalog", [] {
    py::list out;
    for (const auto& e : ExceptionalCatalog::builtin().entries()) {
      py::dict d;
      d["id"] = e.id;
      d["order"] = e.g.order();
      d["g6"] = write_graph6(e.g);
      d["clause"] = clause_label(e.clause);
      out.append(std::move(d));
    }
    return out;
  });
}
