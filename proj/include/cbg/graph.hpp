#ifndef CBG_GRAPH_HPP
#define CBG_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbg {

// A vertex set is a single machine word, one bit per vertex. The whole
// library is built on graphs with at most 64 vertices so that set algebra
// stays branch-free.
using Mask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr Mask vbit(int v) { return Mask{1} << v; }
constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline int popcount(Mask m) { return std::popcount(m); }
inline int first_vertex(Mask m) { return std::countr_zero(m); }

std::vector<int> mask_vertices(Mask m);
Mask mask_of(std::span<const int> vertices);

// Undirected edge with canonical orientation u < v.
struct Edge {
  int u;
  int v;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b || a < 0 || b < 0)
      throw std::invalid_argument("edge endpoints must be distinct non-negative vertices");
  }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Two-coloring of a bipartite graph. part_x and part_y partition the vertex
// set and each part is independent. Per connected component, the least
// vertex of the component lands in part_x.
struct Bipartition {
  Mask part_x = 0;
  Mask part_y = 0;
};

class graph6_error : public std::runtime_error {
 public:
  graph6_error(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Immutable simple undirected graph on at most 64 vertices, adjacency as one
// Mask per vertex. Every operation is a pure function returning fresh values,
// so instances can be shared freely between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  Mask vertex_mask() const noexcept { return full_mask(n_); }

  // Unchecked adjacency row; v must be a valid vertex.
  Mask row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }

  Mask neighbors(int v) const {
    check_vertex(v);
    return row(v);
  }
  int degree(int v) const {
    check_vertex(v);
    return popcount(row(v));
  }
  // Minimum degree; 0 for the empty graph.
  int min_degree() const noexcept;

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && ((row(u) >> v) & 1);
  }
  bool has_edge(Edge e) const noexcept {
    return e.v < n_ && ((row(e.u) >> e.v) & 1);
  }
  std::vector<Edge> edges() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph graph_from_rows(int n, const Mask* rows);
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<Mask> adj_;
};

// Construction from precomputed symmetric, irreflexive rows (internal fast
// path for enumeration loops; the invariants are the caller's obligation).
Graph graph_from_rows(int n, const Mask* rows);

// graph6 codec, bit-exact per the nauty formats document: size as value+63
// bytes, then the upper triangle of the adjacency matrix column-major in
// big-endian 6-bit chunks. parse accepts an optional ">>graph6<<" prefix and
// one trailing newline; every error carries the byte offset of the offending
// position.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Induced subgraph on `keep`, vertices relabeled by order-preserving
// compaction. mask_vertices(keep)[i] is the old label of new vertex i.
Graph induced_subgraph(const Graph& g, Mask keep);

// G - S. Throws if S is not a subset of V(G).
Graph remove_vertices(const Graph& g, Mask drop);

// Edge elimination: G minus both endpoints of e. Throws if e is not an edge.
Graph eliminate_edge(const Graph& g, Edge e);

// Breadth-first two-coloring; absent iff the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// True iff every a in A, b in B are adjacent (vacuously true when either
// side is empty). A and B must be disjoint subsets of V(G).
bool is_complete_bipartite_between(const Graph& g, Mask a, Mask b);

}  // namespace cbg

#endif  // CBG_GRAPH_HPP
