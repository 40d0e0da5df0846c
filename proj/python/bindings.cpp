#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "wellcovered/errors.hpp"
#include "wellcovered/graph6.hpp"
#include "wellcovered/harness.hpp"
#include "wellcovered/report.hpp"
#include "wellcovered/theorem.hpp"

namespace py = pybind11;
using namespace wellcovered;

namespace {

using Members = std::vector<Vertex>;

VertexSet to_set(const Graph& g, const Members& members) { return VertexSet(g.order(), members); }

std::vector<Members> to_lists(const std::vector<VertexSet>& sets) {
  std::vector<Members> out;
  out.reserve(sets.size());
  for (const VertexSet& s : sets) out.push_back(s.members());
  return out;
}

py::dict witness_dict(const ProductWitness& w, const WitnessChecks& checks) {
  py::dict d;
  d["x"] = w.iso.x;
  d["certificate"] = w.iso.certificate.members();
  d["j"] = w.j.members();
  d["j1"] = w.j1.members();
  d["j2"] = w.j2.members();
  d["xa"] = w.xa.members();
  d["xb"] = w.xb.members();
  d["l"] = w.l.members();
  d["m"] = w.m.members();
  d["big"] = w.big.members();
  d["small"] = w.small.members();
  d["valid"] = checks.all();
  return d;
}

}  // namespace

PYBIND11_MODULE(_wellcovered, m) {
  m.doc() = "Well-coveredness of graphs and their Cartesian products";

  static py::exception<Error> error(m, "Error");
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
          py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
  m.def("to_graph6", [](const Graph& g) { return to_graph6(g); });

  m.def(
      "cartesian_product",
      [](const Graph& g, const Graph& h, std::size_t cap) { return cartesian_product(g, h, cap).graph; },
      py::arg("g"), py::arg("h"), py::arg("cap") = kDefaultProductCap,
      "Product graph; vertex (g, h) has index g * |V(H)| + h.");

  m.def(
      "is_independent",
      [](const Graph& g, const Members& s) { return is_independent(g, to_set(g, s)); });
  m.def("is_maximal_independent", [](const Graph& g, const Members& s) {
    return is_maximal_independent(g, to_set(g, s));
  });
  m.def(
      "maximal_independent_sets",
      [](const Graph& g, std::size_t cap) { return to_lists(maximal_independent_sets(g, cap)); },
      py::arg("g"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("independence_number", &independence_number, py::arg("g"),
        py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "is_well_covered",
      [](const Graph& g, std::size_t cap) {
        WellCoveredOptions options;
        options.cap = cap;
        const WellCoveredReport r = is_well_covered(g, options);
        py::dict d;
        d["verdict"] = r.verdict;
        d["alpha"] = r.alpha;
        d["min_maximal"] = r.min_maximal;
        d["witness_max"] = r.witness_max ? py::cast(r.witness_max->members()) : py::none();
        d["witness_min"] = r.witness_min ? py::cast(r.witness_min->members()) : py::none();
        return d;
      },
      py::arg("g"), py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "isolatable_vertices",
      [](const Graph& g, std::size_t cap) {
        py::dict out;
        for (const IsolatableWitness& w : isolatable_vertices(g, cap)) {
          out[py::int_(w.x)] = w.certificate.members();
        }
        return out;
      },
      py::arg("g"), py::arg("cap") = kDefaultEnumerationCap,
      "Map from each isolatable vertex to its certificate set.");

  m.def(
      "greedy_decomposition",
      [](const Graph& g, std::optional<std::vector<Vertex>> order) {
        const GreedyDecomposition d = order ? greedy_decomposition(g, *order) : greedy_decomposition(g);
        return to_lists(d.blocks);
      },
      py::arg("g"), py::arg("order") = py::none());

  m.def(
      "diagonal_set",
      [](const Graph& g, const std::vector<Members>& dg, const Graph& h,
         const std::vector<Members>& dh) {
        GreedyDecomposition a;
        GreedyDecomposition b;
        for (const Members& block : dg) a.blocks.push_back(to_set(g, block));
        for (const Members& block : dh) b.blocks.push_back(to_set(h, block));
        if (!is_greedy_decomposition(g, a) || !is_greedy_decomposition(h, b)) {
          throw PreconditionError(Precondition::kInvalidDecomposition, "diagonal_set");
        }
        return diagonal_set(a, b, ProductIndexMap(g.order(), h.order())).members();
      });

  m.def(
      "clique_remainder",
      [](const Graph& g, const Members& alpha_set, Vertex x) {
        const Subgraph f = clique_remainder(g, to_set(g, alpha_set), x);
        return f.map.kept();
      },
      "Vertices of the host graph that survive in the remainder.");

  m.def(
      "product_witness",
      [](const Graph& g, const Graph& h, std::size_t cap) -> py::object {
        const auto inputs = theorem31_applies(g, h);
        if (!inputs) return py::none();
        const ProductWitness w = build_product_witness(g, inputs->iso, h, inputs->a, inputs->b, cap);
        return witness_dict(w, check_product_witness(g, h, w));
      },
      py::arg("g"), py::arg("h"), py::arg("cap") = kDefaultProductCap,
      "Certificate that G x H is not well-covered, or None when G has no isolatable vertex or H is "
      "well-covered.");

  m.def(
      "check_disjoint_sets",
      [](const Graph& g, const Graph& h) {
        const Lemma32Report r = check_lemma_3_2(g, h);
        py::dict d;
        d["hypotheses_hold"] = r.hypotheses_hold;
        d["conclusion_holds"] = r.conclusion_holds;
        return d;
      });

  m.def(
      "verify_pair",
      [](const Graph& g, const Graph& h, std::size_t cap) {
        return report::product(g, h, cap).dump();
      },
      py::arg("g"), py::arg("h"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "analyze",
      [](const Graph& g, std::size_t cap) { return report::analyze(g, cap).dump(); },
      py::arg("g"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("generate_all_graphs", &generate_all_graphs, py::arg("n"));
  m.def("canonical_form", &canonical_form);

  m.def(
      "scan",
      [](std::size_t max_n, std::size_t product_cap, std::size_t gen_up_to,
         std::vector<std::string> corpus, bool connected_only, std::size_t jobs) {
        ScanConfig c;
        c.max_factor_order = max_n;
        c.max_product_order = product_cap;
        c.generate_up_to = gen_up_to;
        c.corpus_paths = std::move(corpus);
        c.connected_only = connected_only;
        c.parallelism = jobs;
        ScanResult r;
        {
          py::gil_scoped_release release;
          r = run_scan(c);
        }
        return report::scan_json(r).dump();
      },
      py::arg("max_n") = 5, py::arg("product_cap") = 30, py::arg("gen_up_to") = 5,
      py::arg("corpus") = std::vector<std::string>{}, py::arg("connected_only") = false,
      py::arg("jobs") = 1);
}
