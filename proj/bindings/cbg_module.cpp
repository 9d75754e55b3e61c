#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"
#include "cbg/constructions.hpp"
#include "cbg/search.hpp"
#include "cbg/verify.hpp"

namespace py = pybind11;
using namespace cbg;

namespace {

// Vertex sets cross the boundary as python lists, not raw masks.
Mask mask_from_list(const std::vector<int>& vs) { return mask_of(vs); }

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

EliminationOrder order_from_pairs(const std::vector<std::pair<int, int>>& steps) {
  EliminationOrder order;
  for (auto [u, v] : steps) order.steps.emplace_back(u, v);
  order.valid = true;
  return order;
}

py::dict named_graph_dict(const NamedGraph& ng) {
  py::dict claims;
  claims["kappa"] = ng.claims.kappa;
  claims["m"] = ng.claims.edge_count;
  claims["chordal_bipartite"] = ng.claims.chordal_bipartite;
  py::dict d;
  d["name"] = ng.name;
  d["graph"] = ng.graph;
  d["graph6"] = to_graph6(ng.graph);
  d["claims"] = claims;
  d["verified"] = verify_named_claims(ng);
  return d;
}

py::dict record_dict(const SearchRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["k"] = r.k;
  d["m_min"] = r.m_min ? py::cast(*r.m_min) : py::none();
  d["witnesses"] = r.witnesses;
  d["exhaustive"] = r.exhaustive;
  d["truncated"] = r.truncated;
  py::dict stats;
  stats["examined"] = r.stats.examined;
  stats["passed"] = r.stats.passed;
  d["stats"] = stats;
  return d;
}

}  // namespace

PYBIND11_MODULE(cbg, m) {
  m.doc() = "chordal bipartite graph toolkit: recognition, elimination, connectivity, "
            "extremal constructions and exhaustive search";

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", [](const Graph& g, int v) { return mask_vertices(g.neighbors(v)); },
           py::arg("v"))
      .def("min_degree", &Graph::min_degree)
      .def("has_edge", py::overload_cast<int, int>(&Graph::has_edge, py::const_), py::arg("u"),
           py::arg("v"))
      .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) +
               ", graph6='" + to_graph6(g) + "')";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("line"));
  m.def("to_graph6", [](const Graph& g) { return to_graph6(g); }, py::arg("graph"));
  m.def("remove_vertices",
        [](const Graph& g, const std::vector<int>& vs) { return remove_vertices(g, mask_from_list(vs)); },
        py::arg("graph"), py::arg("vertices"));
  m.def("eliminate_edge", [](const Graph& g, int u, int v) { return eliminate_edge(g, Edge(u, v)); },
        py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("bipartition", [](const Graph& g) -> py::object {
    const auto bp = bipartition(g);
    if (!bp) return py::none();
    return py::make_tuple(mask_vertices(bp->part_x), mask_vertices(bp->part_y));
  });

  m.def("components", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (Mask c : components(g)) out.push_back(mask_vertices(c));
    return out;
  });
  m.def("is_vertex_cut",
        [](const Graph& g, const std::vector<int>& s) { return is_vertex_cut(g, mask_from_list(s)); },
        py::arg("graph"), py::arg("s"));
  m.def("cut_vertices", [](const Graph& g) { return mask_vertices(cut_vertices(g)); });
  m.def("vertex_connectivity", [](const Graph& g) { return vertex_connectivity(g); });
  m.def("minimum_vertex_cuts", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (Mask s : minimum_vertex_cuts(g)) out.push_back(mask_vertices(s));
    return out;
  });
  m.def("all_vertex_cuts_up_to", [](const Graph& g, int s_max) {
    std::vector<std::vector<int>> out;
    for (Mask s : all_vertex_cuts_up_to(g, s_max)) out.push_back(mask_vertices(s));
    return out;
  }, py::arg("graph"), py::arg("s_max"));
  m.def("s_components", [](const Graph& g, const std::vector<int>& s) {
    py::list out;
    for (const auto& sc : s_components(g, mask_from_list(s)))
      out.append(py::make_tuple(mask_vertices(sc.vertices), sc.graph));
    return out;
  }, py::arg("graph"), py::arg("s"));

  m.def("is_bisimplicial",
        [](const Graph& g, int u, int v) { return is_bisimplicial(g, Edge(u, v)); }, py::arg("graph"),
        py::arg("u"), py::arg("v"));
  m.def("bisimplicial_edges", [](const Graph& g) { return edge_pairs(bisimplicial_edges(g)); });
  m.def("find_chordless_cycle_ge6", [](const Graph& g) -> py::object {
    const auto w = find_chordless_cycle_ge6(g);
    if (!w) return py::none();
    return py::cast(w->cycle);
  });
  m.def("is_chordal_bipartite", [](const Graph& g) { return is_chordal_bipartite(g); });
  m.def("oracle_is_chordal_bipartite", [](const Graph& g) { return oracle_is_chordal_bipartite(g); });
  m.def("find_peeo", [](const Graph& g, const std::string& mode) -> py::object {
    const auto order =
        find_peeo(g, mode == "backtracking" ? PeeoMode::Backtracking : PeeoMode::Greedy);
    if (!order) return py::none();
    return py::cast(edge_pairs(order->steps));
  }, py::arg("graph"), py::arg("mode") = "greedy");
  m.def("verify_peeo", [](const Graph& g, const std::vector<std::pair<int, int>>& steps) {
    return static_cast<bool>(verify_peeo(g, order_from_pairs(steps)));
  }, py::arg("graph"), py::arg("steps"));
  m.def("random_chordal_bipartite", &random_chordal_bipartite, py::arg("n"), py::arg("target_m"),
        py::arg("seed"));

  m.def("path", &path, py::arg("k"));
  m.def("cycle", &cycle, py::arg("k"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("p"), py::arg("q"));
  m.def("grid", &grid, py::arg("rows"), py::arg("cols"));
  m.def("extremal_even", [](int n) { return named_graph_dict(extremal_even(n)); }, py::arg("n"));
  m.def("extremal_odd", [](int n) { return named_graph_dict(extremal_odd(n)); }, py::arg("n"));
  m.def("figure4_graph", [] { return named_graph_dict(figure4_graph()); });

  m.def("theorem_bound", &theorem_bound, py::arg("n"));
  m.def("check_theorem", [](const Graph& g) {
    const auto v = check_theorem(g);
    py::dict d;
    d["n"] = v.n;
    d["m"] = v.m;
    d["kappa"] = v.kappa;
    d["bound"] = v.bound;
    d["satisfied"] = v.satisfied;
    d["vacuous"] = v.vacuous;
    return d;
  });
  m.def("check_lemma1",
        [](const Graph& g, const std::vector<int>& s) { return check_lemma1(g, mask_from_list(s)); },
        py::arg("graph"), py::arg("s"));
  m.def("check_lemma3", [](const Graph& g) { return check_lemma3(g); });
  m.def("check_lemma5", [](const Graph& g, int u, int v, const std::vector<int>& s) {
    const auto r = check_lemma5(g, Edge(u, v), mask_from_list(s));
    py::list items;
    for (const auto& item : r.items) {
      py::dict d;
      d["ok"] = item.ok;
      d["witness"] = item.witness;
      items.append(d);
    }
    py::dict d;
    d["kappa"] = r.kappa;
    d["u_side"] = mask_vertices(r.u_side);
    d["v_side"] = mask_vertices(r.v_side);
    d["items"] = items;
    d["all_ok"] = r.all_ok();
    return d;
  }, py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("s"));
  m.def("check_lemma6", [](const Graph& g) { return check_lemma6(g); });
  m.def("check_proof_claims", [](const Graph& g) {
    const auto r = check_proof_claims(g);
    py::dict d;
    d["ok"] = r.ok;
    d["vacuous"] = r.vacuous;
    d["instances"] = r.instances;
    d["witness"] = r.witness;
    return d;
  });
  m.def("conjecture_lower", [](int n, int k) {
    const auto r = conjecture_lower(n, k);
    return py::make_tuple(r.num, r.den);
  }, py::arg("n"), py::arg("k"));

  m.def("canonical_form", [](const Graph& g) { return canonical_form(g); });
  m.def("enumerate_min_size",
        [](int n, int k, int jobs) { return record_dict(enumerate_min_size(n, k, jobs)); },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 1);
  m.def("conjecture_table", [](int k, int n_lo, int n_hi, int jobs) {
    py::list out;
    for (const auto& r : conjecture_table(k, n_lo, n_hi, jobs)) out.append(record_dict(r));
    return out;
  }, py::arg("k"), py::arg("n_lo"), py::arg("n_hi"), py::arg("jobs") = 1);
  m.def("peeo_counterexample_search", [](int n_max) -> py::object {
    const auto g = peeo_counterexample_search(n_max);
    if (!g) return py::none();
    return py::cast(*g);
  }, py::arg("n_max"));
  m.def("connected_bipartite_classes", [](int n) { return connected_bipartite_classes(n); },
        py::arg("n"));
}
