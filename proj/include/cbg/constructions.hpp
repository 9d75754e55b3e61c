#ifndef CBG_CONSTRUCTIONS_HPP
#define CBG_CONSTRUCTIONS_HPP

#include <string>

#include "cbg/graph.hpp"

namespace cbg {

// A constructed graph together with the certificate data it is claimed to
// satisfy. Claims are never trusted: construction tests recompute them via
// the connectivity and chordality modules.
struct NamedGraph {
  Graph graph;
  std::string name;
  struct Claims {
    int kappa = 0;
    int edge_count = 0;
    bool chordal_bipartite = false;
  } claims;
};

// Vertices 0..k-1 in path/cycle order; K_{p,q} takes the first p labels as
// one side.
Graph path(int k);
Graph cycle(int k);
Graph complete_bipartite(int p, int q);

// Cartesian product of paths on rows and cols vertices; vertex (i, j) gets
// label i*cols + j.
Graph grid(int rows, int cols);

// The tight even-order family: the 2 x n/2 grid, n even and >= 4.
NamedGraph extremal_even(int n);

// The tight odd-order family: K_{2,3} sharing an end-rung edge with a
// 2 x (n-3)/2 grid, n odd and >= 5. Labels 0..n-4 are the grid (rows of
// length (n-3)/2), labels n-3, n-2, n-1 the three added vertices; the shared
// edge is (0, (n-3)/2).
NamedGraph extremal_odd(int n);

// The 10-vertex example with connectivity 3 whose bisimplicial edge (1, 5)
// drops the connectivity of both the elimination and the single-vertex
// deletion to 2. Top part 0..4, bottom part 5..9.
NamedGraph figure4_graph();

// Recomputes the claims tuple; true iff it matches exactly.
bool verify_named_claims(const NamedGraph& ng);

}  // namespace cbg

#endif  // CBG_CONSTRUCTIONS_HPP
