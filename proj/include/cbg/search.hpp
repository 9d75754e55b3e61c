#ifndef CBG_SEARCH_HPP
#define CBG_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cbg/graph.hpp"

namespace cbg {

// Canonical graph6 string under part-respecting relabeling: the
// lexicographically least biadjacency over all permutations within each part
// (and the part swap when the sizes agree), computed by branch-and-bound
// with column refinement. Two connected bipartite graphs receive the same
// form iff they are isomorphic. Throws for disconnected or non-bipartite
// input and for n > 14.
std::string canonical_form(const Graph& g);

struct SearchStats {
  std::uint64_t examined = 0;
  std::uint64_t pruned_min_degree = 0;
  std::uint64_t pruned_disconnected = 0;
  std::uint64_t pruned_kappa = 0;
  std::uint64_t pruned_not_chordal_bipartite = 0;
  std::uint64_t passed = 0;
  SearchStats& operator+=(const SearchStats& o);
};

struct SearchRecord {
  int n = 0;
  int k = 0;
  // Minimum size over chordal bipartite graphs with kappa >= k and order n;
  // absent when the class is empty (or the search was truncated).
  std::optional<int> m_min;
  // All minimum-size isomorphism classes, as sorted canonical graph6.
  std::vector<std::string> witnesses;
  SearchStats stats;
  bool exhaustive = true;
  bool truncated = false;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Exhaustive labeled enumeration over every bipartition shape, edge count
// ascending from the degree lower envelope, stopping at the first feasible
// size. Output is byte-identical for any worker count. Built-in mode covers
// 4 <= n <= 10, k >= 2.
SearchRecord enumerate_min_size(int n, int k, int jobs = 1, Deadline deadline = {});

// One record per order in [n_lo, n_hi] for connectivity k >= 3.
std::vector<SearchRecord> conjecture_table(int k, int n_lo, int n_hi, int jobs = 1,
                                           Deadline deadline = {});

// Calls fn once per isomorphism class of connected bipartite graphs of order
// n, in a fixed deterministic order; fn returning true stops the scan early.
// Budget: n <= 10.
void for_each_connected_bipartite_class(int n, const std::function<bool(const Graph&)>& fn);

// Collects the classes above (budget n <= 9; the order-10 tier is reserved
// for early-exit scans).
std::vector<Graph> connected_bipartite_classes(int n);

// First connected bipartite graph, by increasing order, that has a perfect
// edge elimination order but is not chordal bipartite. Budget: n_max <= 10.
std::optional<Graph> peeo_counterexample_search(int n_max);

struct FilterConfig {
  bool bipartite = false;
  bool chordal_bipartite = false;
  int kappa_at_least = 0;
  int min_degree = 0;
  std::optional<int> edges_at_most;
  std::optional<int> edges_exactly;
};

struct FilterStats {
  std::uint64_t lines_read = 0;
  std::uint64_t malformed = 0;
  std::uint64_t passed = 0;
  std::optional<int> min_edges_passed;
  std::string min_edges_witness;
};

// Reads graph6 lines, emits those passing the predicate conjunction.
// Malformed lines are counted and skipped, never fatal.
FilterStats filter_stream(std::istream& in, const FilterConfig& cfg,
                          const std::function<void(const std::string&, const Graph&)>& emit);

namespace detail {
// Canonical form of a biadjacency given directly as p row masks over q
// columns (p <= q enforced by transposition inside).
std::string canonical_biadjacency_form(int p, int q, const std::uint32_t* rows);
}  // namespace detail

}  // namespace cbg

#endif  // CBG_SEARCH_HPP
