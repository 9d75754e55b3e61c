#ifndef CBG_CHORDALITY_HPP
#define CBG_CHORDALITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cbg/graph.hpp"

namespace cbg {

// A chordless cycle of length >= 6: consecutive vertices (and the wrap
// around) are adjacent and no other pair is.
struct ChordlessCycleWitness {
  std::vector<int> cycle;
};

enum class ChordalityVerdict { ChordalBipartite, NotBipartite, LongChordlessCycle };

struct Recognition {
  ChordalityVerdict verdict = ChordalityVerdict::ChordalBipartite;
  // Chordless cycle of length >= 6 when the verdict is LongChordlessCycle,
  // an odd cycle when NotBipartite.
  std::optional<std::vector<int>> witness;
  bool chordal_bipartite() const { return verdict == ChordalityVerdict::ChordalBipartite; }
};

// Sequence of vertex-disjoint edges, in the labels of the graph it was
// computed for; step i must be bisimplicial once the previous steps are
// eliminated, and eliminating all steps must leave an edgeless graph.
struct EliminationOrder {
  std::vector<Edge> steps;
  bool valid = false;
};

enum class PeeoMode { Greedy, Backtracking };

struct PeeoCheck {
  bool ok = false;
  // Index of the first violated step, -1 when ok or when the failure is the
  // leftover edges at the end.
  int first_bad_step = -1;
  enum class Reason { None, EndpointReused, NotAnEdge, NotBisimplicial, LeftoverEdges } reason = Reason::None;
  explicit operator bool() const { return ok; }
};

// True iff every x in N(u)\{v} is adjacent to every y in N(v)\{u}; in a
// bipartite graph this is the usual bisimplicial condition on the edge uv.
// Throws when e is not an edge or the graph is not bipartite.
bool is_bisimplicial(const Graph& g, Edge e);

// All bisimplicial edges in canonical order. Throws on non-bipartite input.
std::vector<Edge> bisimplicial_edges(const Graph& g);

// Depth-first chordless-path extension; absent iff no chordless cycle of
// length >= 6 exists. The witness starts at its least vertex, second
// element smaller than the last.
std::optional<ChordlessCycleWitness> find_chordless_cycle_ge6(const Graph& g);

// Bipartite with no chordless cycle of length >= 6.
bool is_chordal_bipartite(const Graph& g);

// Same decision plus the reason and a witness; never throws on bad input so
// corpus streams can be filtered without aborting.
Recognition recognize_chordal_bipartite(const Graph& g);

// Literal application of the definition: enumerate every cycle of length
// >= 6 by backtracking and test each for a chord. Test-oracle only; throws
// for n > 12.
bool oracle_is_chordal_bipartite(const Graph& g);

// Greedy mode repeatedly eliminates the first bisimplicial edge; complete
// for chordal bipartite inputs. Backtracking mode is exhaustive and decides
// existence for every bipartite graph. Throws on non-bipartite input.
std::optional<EliminationOrder> find_peeo(const Graph& g, PeeoMode mode);

// Re-derives every condition independently of find_peeo: disjoint
// endpoints, step-wise bisimpliciality, final edgelessness.
PeeoCheck verify_peeo(const Graph& g, const EliminationOrder& order);

// Random spanning tree on a random bipartition, then uniformly random
// absent cross-edges kept only when the graph stays chordal bipartite,
// until target_m edges or the proposal budget runs out. Deterministic under
// a fixed seed.
Graph random_chordal_bipartite(int n, int target_m, std::uint64_t seed);

namespace detail {
// Bisimplicial test restricted to the subgraph induced on `alive`; no
// precondition checks.
bool bisimplicial_within(const Graph& g, Mask alive, int u, int v);
}  // namespace detail

}  // namespace cbg

#endif  // CBG_CHORDALITY_HPP
