#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmdsg/constructions.hpp"
#include "pmdsg/frank_wolfe.hpp"
#include "pmdsg/iterate.hpp"
#include "pmdsg/oracle.hpp"
#include "pmdsg/peeling.hpp"

namespace py = pybind11;
using namespace pmdsg;

namespace {

// Undefined densities (finite p < 0 with an isolated member) surface as None.
py::object density_obj(const Density& d) {
  if (!d.defined) return py::none();
  return py::float_(d.value);
}

VertexSet to_set(const Graph& g, const std::vector<int>& vs) {
  for (int v : vs)
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex id out of range");
  return VertexSet::of(g.n(), vs);
}

}  // namespace

PYBIND11_MODULE(_pmdsg, m) {
  m.doc() = "Generalized p-mean densest subgraph toolkit";

  py::class_<Graph>(m, "Graph")
      .def_static(
          "load",
          [](const std::string& path, bool weighted) {
            return Graph::load_edge_list_file(path, weighted);
          },
          py::arg("path"), py::arg("weighted") = false)
      .def_static(
          "from_edges",
          [](const std::vector<std::tuple<long long, long long, double>>& edges,
             bool weighted) {
            std::vector<Graph::RawEdge> raw;
            raw.reserve(edges.size());
            for (const auto& [u, v, w] : edges) raw.push_back({u, v, w});
            return Graph::from_raw_edges(raw, weighted);
          },
          py::arg("edges"), py::arg("weighted") = false)
      .def_static("clique", &Graph::clique, py::arg("k"))
      .def_static("complete_bipartite", &Graph::complete_bipartite, py::arg("a"),
                  py::arg("b"))
      .def_static("circulant", &Graph::circulant, py::arg("n"), py::arg("offsets"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("weighted", &Graph::weighted)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("weighted_degree", &Graph::weighted_degree, py::arg("v"))
      .def("label", &Graph::label, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("neighbors",
           [](const Graph& g, int v) {
             auto s = g.neighbors(v);
             return std::vector<int>(s.begin(), s.end());
           },
           py::arg("v"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) +
               (g.weighted() ? ", weighted" : "") + ")";
      });

  m.def(
      "f_p",
      [](const Graph& g, const std::vector<int>& s, double p) -> py::object {
        auto r = f_p(g, to_set(g, s), p);
        if (!r) return py::none();
        return py::float_(*r);
      },
      py::arg("g"), py::arg("vertices"), py::arg("p"));
  m.def(
      "m_p",
      [](const Graph& g, const std::vector<int>& s, double p) {
        return density_obj(m_p(g, to_set(g, s), p));
      },
      py::arg("g"), py::arg("vertices"), py::arg("p"));

  py::class_<PeelResult>(m, "PeelResult")
      .def_readonly("order", &PeelResult::order)
      .def_readonly("best_start", &PeelResult::best_start)
      .def_property_readonly(
          "best_set", [](const PeelResult& r) { return r.best_set.members(); })
      .def_property_readonly(
          "best_density", [](const PeelResult& r) { return density_obj(r.best_density); })
      .def_property_readonly("per_suffix",
                             [](const PeelResult& r) {
                               py::list out;
                               for (const Density& d : r.per_suffix)
                                 out.append(density_obj(d));
                               return out;
                             })
      .def("__repr__", [](const PeelResult& r) {
        return "PeelResult(best_density=" +
               (r.best_density.defined ? std::to_string(r.best_density.value)
                                       : std::string("None")) +
               ", best_size=" + std::to_string(r.best_set.size()) + ")";
      });

  m.def("greedy_p", &greedy_p, py::arg("g"), py::arg("p"));
  m.def(
      "lazy_greedy_p",
      [](const Graph& g, double p, double eps) { return lazy_greedy_p(g, p, eps); },
      py::arg("g"), py::arg("p"), py::arg("eps") = 0.5);
  m.def("simple_greedy_p", &simple_greedy_p, py::arg("g"), py::arg("p"));
  m.def("simple_greedy_order", &simple_greedy_order, py::arg("g"));
  m.def(
      "degeneracy_maxcore",
      [](const Graph& g) {
        CoreResult r = degeneracy_maxcore(g);
        return py::make_tuple(r.degeneracy, r.core.members());
      },
      py::arg("g"), "Returns (degeneracy, core_vertices).");

  py::class_<IterState>(m, "IterState")
      .def_readonly("loads", &IterState::loads)
      .def_readonly("iterations", &IterState::iterations)
      .def_readonly("best", &IterState::best)
      .def_readonly("best_iteration", &IterState::best_iteration)
      .def_readonly("per_iteration", &IterState::per_iteration)
      .def_readonly("trajectory", &IterState::trajectory);

  m.def(
      "greedy_pp",
      [](const Graph& g, double p, int iters, bool lazy, double eps) {
        return greedy_pp(g, p, iters, lazy ? InnerMode::lazy_eps(eps) : InnerMode::exact());
      },
      py::arg("g"), py::arg("p"), py::arg("iters") = 100, py::arg("lazy") = false,
      py::arg("eps") = 0.5);

  py::class_<SimplePPResult>(m, "SimplePPResult")
      .def_readonly("ps", &SimplePPResult::ps)
      .def_readonly("per_p", &SimplePPResult::per_p);
  m.def("simple_pp", &simple_pp, py::arg("g"), py::arg("iters"), py::arg("ps"));

  py::class_<FWState>(m, "FWState")
      .def_readonly("b", &FWState::b)
      .def_readonly("iterations", &FWState::iterations)
      .def_readonly("objective_trace", &FWState::objective_trace)
      .def_readonly("rounded", &FWState::rounded);
  m.def(
      "frank_wolfe",
      [](const Graph& g, double p, int iters) { return frank_wolfe(g, p, iters); },
      py::arg("g"), py::arg("p"), py::arg("iters") = 500);
  m.def("round_fractional", &round_fractional, py::arg("g"), py::arg("p"), py::arg("b"));

  m.def(
      "brute_force_opt",
      [](const Graph& g, double p, int limit) {
        OracleResult r = brute_force_opt(g, p, limit);
        return py::make_tuple(density_obj(r.best_density), r.best_set.members());
      },
      py::arg("g"), py::arg("p"), py::arg("limit") = 22,
      "Exhaustive optimum; returns (density, vertices).");

  m.def("bickle_graph", &bickle_graph, py::arg("n"), py::arg("d"));
  m.def(
      "x3c_decide",
      [](int n, const std::vector<std::array<int, 3>>& sets, double p, bool weighted) {
        X3CInstance inst{n, sets};
        return x3c_decide(inst, p, weighted);
      },
      py::arg("n"), py::arg("sets"), py::arg("p"), py::arg("weighted"));
}
