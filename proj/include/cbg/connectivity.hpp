#ifndef CBG_CONNECTIVITY_HPP
#define CBG_CONNECTIVITY_HPP

#include <vector>

#include "cbg/graph.hpp"

namespace cbg {

// A vertex cut S together with the components of G - S, in ascending order
// of least element. Everything is expressed in the labels of the graph the
// report was computed from.
struct CutReport {
  Mask cut = 0;
  std::vector<Mask> components;
  int component_count = 0;
};

// For a cut S and a component F of G - S: the subgraph induced by S union F.
// `vertices` is that set in parent labels; `labels[i]` is the parent label of
// vertex i of `graph`.
struct SComponent {
  Mask vertices = 0;
  Graph graph;
  std::vector<int> labels;
};

// Maximal connected vertex sets, each reported once, sorted by least element.
std::vector<Mask> components(const Graph& g);

// Components of the subgraph induced on `within` (labels unchanged).
std::vector<Mask> components_within(const Graph& g, Mask within);

bool is_connected(const Graph& g);

// True iff G - S has at least two components.
bool is_vertex_cut(const Graph& g, Mask s);

// Vertices whose removal disconnects the graph.
Mask cut_vertices(const Graph& g);

// Exact vertex connectivity. Complete graphs (including K1) give n-1 and
// disconnected graphs give 0; otherwise the minimum s-t vertex cut over the
// standard Even/Tarjan terminal pairs, via unit-capacity vertex-split max
// flow. Throws for the empty graph.
int vertex_connectivity(const Graph& g);

// Early-exit variant: true iff kappa(G) >= k. Flows are capped at k.
bool vertex_connectivity_at_least(const Graph& g, int k);

// All vertex cuts of size kappa(G), by exhaustive subset enumeration.
// Desk-scale contract: throws when G is complete, n > 24 or kappa > 5.
std::vector<Mask> minimum_vertex_cuts(const Graph& g);

// Every vertex cut S with |S| <= s_max, including non-minimal ones, ordered
// by size then ascending mask value. s_max above 6 exceeds the enumeration
// budget and throws.
std::vector<Mask> all_vertex_cuts_up_to(const Graph& g, int s_max);

// Same, but cuts are subsets of `within` judged on the induced subgraph,
// reported in parent labels.
std::vector<Mask> all_vertex_cuts_up_to(const Graph& g, Mask within, int s_max);

// Throws if S is not a vertex cut.
CutReport cut_report(const Graph& g, Mask s);

// One SComponent per component of G - S. Throws if S is not a vertex cut.
std::vector<SComponent> s_components(const Graph& g, Mask s);

}  // namespace cbg

#endif  // CBG_CONNECTIVITY_HPP
