#include "cbg/json_io.hpp"

namespace cbg {

json vertex_array(Mask m) {
  json arr = json::array();
  for (int v : mask_vertices(m)) arr.push_back(v);
  return arr;
}

json json_of(const SearchStats& s) {
  return json{{"examined", s.examined},
              {"pruned_min_degree", s.pruned_min_degree},
              {"pruned_disconnected", s.pruned_disconnected},
              {"pruned_kappa", s.pruned_kappa},
              {"pruned_not_chordal_bipartite", s.pruned_not_chordal_bipartite},
              {"passed", s.passed}};
}

json json_of(const SearchRecord& r) {
  json j{{"n", r.n}, {"k", r.k}};
  if (r.m_min)
    j["m_min"] = *r.m_min;
  else
    j["m_min"] = nullptr;
  j["witnesses"] = r.witnesses;
  j["exhaustive"] = r.exhaustive;
  j["truncated"] = r.truncated;
  j["stats"] = json_of(r.stats);
  return j;
}

json json_of_conjecture_row(const SearchRecord& r) {
  json j = json_of(r);
  if (r.m_min)
    j["intercept"] = (1.0 + r.k) * r.n / 2.0 - *r.m_min;
  else
    j["intercept"] = nullptr;
  return j;
}

json json_of(const BoundVerdict& v) {
  return json{{"n", v.n},         {"m", v.m},
              {"kappa", v.kappa}, {"bound", v.bound},
              {"satisfied", v.satisfied}, {"vacuous", v.vacuous}};
}

json json_of(const Recognition& r) {
  json j;
  j["chordal_bipartite"] = r.chordal_bipartite();
  switch (r.verdict) {
    case ChordalityVerdict::ChordalBipartite:
      j["reason"] = "chordal-bipartite";
      break;
    case ChordalityVerdict::NotBipartite:
      j["reason"] = "not-bipartite";
      break;
    case ChordalityVerdict::LongChordlessCycle:
      j["reason"] = "chordless-cycle";
      break;
  }
  if (r.witness)
    j["witness"] = *r.witness;
  else
    j["witness"] = nullptr;
  return j;
}

json json_of(const Lemma5Report& r) {
  json items = json::array();
  for (const auto& item : r.items)
    items.push_back(json{{"ok", item.ok}, {"witness", item.witness}});
  json comps = json::array();
  for (Mask f : r.components) comps.push_back(vertex_array(f));
  return json{{"kappa", r.kappa},
              {"u_side", vertex_array(r.u_side)},
              {"v_side", vertex_array(r.v_side)},
              {"cut", vertex_array(r.cut)},
              {"components", comps},
              {"items", items},
              {"item3_same_component", r.item3_same_component},
              {"all_ok", r.all_ok()}};
}

json json_of(const ProofClaimsReport& r) {
  return json{
      {"ok", r.ok}, {"vacuous", r.vacuous}, {"instances", r.instances}, {"witness", r.witness}};
}

json json_of(const NamedGraph& g) {
  return json{{"name", g.name},
              {"graph6", to_graph6(g.graph)},
              {"claims",
               json{{"kappa", g.claims.kappa},
                    {"m", g.claims.edge_count},
                    {"chordal_bipartite", g.claims.chordal_bipartite}}}};
}

json json_of(const CutReport& r) {
  json comps = json::array();
  for (Mask f : r.components) comps.push_back(vertex_array(f));
  return json{{"cut", vertex_array(r.cut)}, {"components", comps}, {"count", r.component_count}};
}

json json_of(const FilterStats& s) {
  json j{{"read", s.lines_read}, {"malformed", s.malformed}, {"passed", s.passed}};
  if (s.min_edges_passed) {
    j["min_edges"] = *s.min_edges_passed;
    j["min_edges_witness"] = s.min_edges_witness;
  } else {
    j["min_edges"] = nullptr;
    j["min_edges_witness"] = nullptr;
  }
  return j;
}

}  // namespace cbg
