#include "cbg/constructions.hpp"

#include <utility>
#include <vector>

#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"

namespace cbg {

Graph path(int k) {
  if (k < 1) throw std::invalid_argument("path needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, edges);
}

Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, edges);
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite needs p, q >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  return Graph::from_edges(p + q, edges);
}

Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
  if (rows * cols > kMaxOrder) throw std::invalid_argument("grid exceeds 64 vertices");
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  return Graph::from_edges(rows * cols, edges);
}

NamedGraph extremal_even(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("extremal_even needs even n >= 4");
  NamedGraph ng;
  ng.graph = grid(2, n / 2);
  ng.name = "extremal-even(" + std::to_string(n) + ")";
  ng.claims = {2, 3 * n / 2 - 2, true};
  return ng;
}

NamedGraph extremal_odd(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("extremal_odd needs odd n >= 5");
  const int cols = (n - 3) / 2;
  Graph g = grid(2, cols);
  // Glue K_{2,3} onto the end rung (0, cols): new vertices a, b, c with a in
  // the same part as the rung's bottom endpoint. Parts of the K_{2,3} are
  // {a, cols} and {b, c, 0}; the rung edge itself is the identified edge.
  const int a = 2 * cols, b = 2 * cols + 1, c = 2 * cols + 2;
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  edges.emplace_back(a, b);
  edges.emplace_back(a, c);
  edges.emplace_back(a, 0);
  edges.emplace_back(cols, b);
  edges.emplace_back(cols, c);
  NamedGraph ng;
  ng.graph = Graph::from_edges(n, edges);
  ng.name = "extremal-odd(" + std::to_string(n) + ")";
  ng.claims = {2, (3 * n - 3) / 2, true};
  return ng;
}

NamedGraph figure4_graph() {
  const std::vector<std::pair<int, int>> edges = {
      {0, 5}, {0, 6}, {0, 8}, {0, 9},          // t0
      {1, 5}, {1, 6}, {1, 9},                  // t1 (the v of the bisimplicial edge)
      {2, 7}, {2, 8}, {2, 9},                  // t2
      {3, 7}, {3, 8}, {3, 9},                  // t3
      {4, 5}, {4, 6}, {4, 7}, {4, 8}, {4, 9},  // t4
  };
  NamedGraph ng;
  ng.graph = Graph::from_edges(10, edges);
  ng.name = "figure4";
  ng.claims = {3, 18, true};
  return ng;
}

bool verify_named_claims(const NamedGraph& ng) {
  return ng.graph.size() == ng.claims.edge_count &&
         vertex_connectivity(ng.graph) == ng.claims.kappa &&
         is_chordal_bipartite(ng.graph) == ng.claims.chordal_bipartite;
}

}  // namespace cbg
