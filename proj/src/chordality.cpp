#include "cbg/chordality.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "cbg/connectivity.hpp"

namespace cbg {

namespace detail {

bool bisimplicial_within(const Graph& g, Mask alive, int u, int v) {
  const Mask us = g.row(u) & alive & ~vbit(v);
  const Mask vs = g.row(v) & alive & ~vbit(u);
  for (Mask t = us; t; t &= t - 1)
    if ((g.row(first_vertex(t)) & vs) != vs) return false;
  return true;
}

}  // namespace detail

namespace {

void require_bipartite(const Graph& g) {
  if (!bipartition(g)) throw std::invalid_argument("graph is not bipartite");
}

// Recovers an odd cycle from a failed two-coloring, for witness reporting.
std::vector<int> find_odd_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (depth[static_cast<std::size_t>(start)] >= 0) continue;
    depth[static_cast<std::size_t>(start)] = 0;
    std::vector<int> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (Mask t = g.row(u); t; t &= t - 1) {
        const int w = first_vertex(t);
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if ((depth[static_cast<std::size_t>(w)] & 1) == (depth[static_cast<std::size_t>(u)] & 1)) {
          // Same parity: u..lca..w plus the edge uw is an odd cycle.
          std::vector<int> pu{u}, pw{w};
          int a = u, b = w;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) pu.push_back(a = parent[static_cast<std::size_t>(a)]);
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) pw.push_back(b = parent[static_cast<std::size_t>(b)]);
          while (a != b) {
            pu.push_back(a = parent[static_cast<std::size_t>(a)]);
            pw.push_back(b = parent[static_cast<std::size_t>(b)]);
          }
          pu.pop_back();
          std::reverse(pw.begin(), pw.end());
          pu.insert(pu.end(), pw.begin(), pw.end());
          return pu;
        }
      }
    }
  }
  return {};
}

// Chordless-path extension with a least-vertex anchor: the path lives on
// vertices above v0, interior vertices may touch neither v0 nor any path
// vertex before the current endpoint, and a closing vertex must be adjacent
// to exactly v0 and the endpoint.
class ChordlessCycleSearch {
 public:
  explicit ChordlessCycleSearch(const Graph& g) : g_(g) {}

  std::optional<std::vector<int>> run() {
    const int n = g_.order();
    for (int v0 = 0; v0 < n; ++v0) {
      v0_ = v0;
      above_ = g_.vertex_mask() & ~full_mask(v0 + 1);
      path_.assign(1, v0);
      for (Mask t = g_.row(v0) & above_; t; t &= t - 1) {
        const int v1 = first_vertex(t);
        path_.push_back(v1);
        if (extend(v1, vbit(v0) | vbit(v1), 0)) {
          if (path_[1] > path_.back()) std::reverse(path_.begin() + 1, path_.end());
          return path_;
        }
        path_.pop_back();
      }
    }
    return std::nullopt;
  }

 private:
  bool extend(int last, Mask used, Mask blocked) {
    const Mask cand = g_.row(last) & above_ & ~used & ~blocked;
    if (path_.size() >= 5) {
      const Mask closers = cand & g_.row(v0_);
      if (closers) {
        path_.push_back(first_vertex(closers));
        return true;
      }
    }
    for (Mask t = cand & ~g_.row(v0_); t; t &= t - 1) {
      const int w = first_vertex(t);
      path_.push_back(w);
      if (extend(w, used | vbit(w), blocked | g_.row(last))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int v0_ = 0;
  Mask above_ = 0;
  std::vector<int> path_;
};

bool edgeless_within(const Graph& g, Mask alive) {
  for (Mask t = alive; t; t &= t - 1)
    if (g.row(first_vertex(t)) & alive) return false;
  return true;
}

// First bisimplicial edge of the subgraph induced on `alive`, in (u, v)
// order; nullopt when none exists.
std::optional<Edge> first_bisimplicial_within(const Graph& g, Mask alive) {
  for (Mask tu = alive; tu; tu &= tu - 1) {
    const int u = first_vertex(tu);
    for (Mask tv = g.row(u) & alive & ~full_mask(u + 1); tv; tv &= tv - 1) {
      const int v = first_vertex(tv);
      if (detail::bisimplicial_within(g, alive, u, v)) return Edge(u, v);
    }
  }
  return std::nullopt;
}

bool peeo_backtrack(const Graph& g, Mask alive, std::vector<Edge>& steps,
                    std::unordered_set<Mask>& dead) {
  if (edgeless_within(g, alive)) return true;
  if (dead.contains(alive)) return false;
  for (Mask tu = alive; tu; tu &= tu - 1) {
    const int u = first_vertex(tu);
    for (Mask tv = g.row(u) & alive & ~full_mask(u + 1); tv; tv &= tv - 1) {
      const int v = first_vertex(tv);
      if (!detail::bisimplicial_within(g, alive, u, v)) continue;
      steps.emplace_back(u, v);
      if (peeo_backtrack(g, alive & ~(vbit(u) | vbit(v)), steps, dead)) return true;
      steps.pop_back();
    }
  }
  dead.insert(alive);
  return false;
}

}  // namespace

bool is_bisimplicial(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("uv is not an edge");
  require_bipartite(g);
  return detail::bisimplicial_within(g, g.vertex_mask(), e.u, e.v);
}

std::vector<Edge> bisimplicial_edges(const Graph& g) {
  require_bipartite(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (detail::bisimplicial_within(g, g.vertex_mask(), e.u, e.v)) out.push_back(e);
  return out;
}

std::optional<ChordlessCycleWitness> find_chordless_cycle_ge6(const Graph& g) {
  auto cycle = ChordlessCycleSearch(g).run();
  if (!cycle) return std::nullopt;
  return ChordlessCycleWitness{std::move(*cycle)};
}

bool is_chordal_bipartite(const Graph& g) {
  return bipartition(g).has_value() && !find_chordless_cycle_ge6(g);
}

Recognition recognize_chordal_bipartite(const Graph& g) {
  Recognition r;
  if (!bipartition(g)) {
    r.verdict = ChordalityVerdict::NotBipartite;
    r.witness = find_odd_cycle(g);
    return r;
  }
  if (auto w = find_chordless_cycle_ge6(g)) {
    r.verdict = ChordalityVerdict::LongChordlessCycle;
    r.witness = std::move(w->cycle);
  }
  return r;
}

bool oracle_is_chordal_bipartite(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("oracle budget is n <= 12");
  if (!bipartition(g)) return false;

  // Enumerate every simple cycle once (least vertex first, smaller second
  // endpoint) and test it for a chord.
  std::vector<int> path;
  bool chordless_found = false;
  auto chord_free = [&](const std::vector<int>& cyc) {
    Mask cm = 0;
    for (int v : cyc) cm |= vbit(v);
    const int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) {
      const Mask allowed = vbit(cyc[static_cast<std::size_t>((i + 1) % len)]) |
                           vbit(cyc[static_cast<std::size_t>((i + len - 1) % len)]);
      if (g.row(cyc[static_cast<std::size_t>(i)]) & cm & ~allowed & ~vbit(cyc[static_cast<std::size_t>(i)]))
        return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int last, Mask used) -> void {
    if (chordless_found) return;
    const int v0 = path.front();
    for (Mask t = g.row(last) & ~used & ~full_mask(v0); t; t &= t - 1) {
      const int w = first_vertex(t);
      if (w == v0) continue;
      path.push_back(w);
      if (path.size() >= 4 && (g.row(w) >> v0 & 1) && path[1] < w) {
        if (path.size() >= 6 && chord_free(path)) {
          chordless_found = true;
          path.pop_back();
          return;
        }
      }
      self(self, w, used | vbit(w));
      path.pop_back();
      if (chordless_found) return;
    }
  };
  for (int v0 = 0; v0 < n && !chordless_found; ++v0) {
    path.assign(1, v0);
    dfs(dfs, v0, vbit(v0));
  }
  return !chordless_found;
}

std::optional<EliminationOrder> find_peeo(const Graph& g, PeeoMode mode) {
  require_bipartite(g);
  EliminationOrder order;
  Mask alive = g.vertex_mask();
  if (mode == PeeoMode::Greedy) {
    while (!edgeless_within(g, alive)) {
      const auto e = first_bisimplicial_within(g, alive);
      if (!e) return std::nullopt;
      order.steps.push_back(*e);
      alive &= ~(vbit(e->u) | vbit(e->v));
    }
  } else {
    std::unordered_set<Mask> dead;
    if (!peeo_backtrack(g, alive, order.steps, dead)) return std::nullopt;
  }
  order.valid = true;
  return order;
}

PeeoCheck verify_peeo(const Graph& g, const EliminationOrder& order) {
  PeeoCheck check;
  Mask alive = g.vertex_mask();
  for (std::size_t i = 0; i < order.steps.size(); ++i) {
    const Edge e = order.steps[i];
    if (e.v >= g.order()) throw std::out_of_range("elimination step endpoint outside V(G)");
    if (!((alive >> e.u) & 1) || !((alive >> e.v) & 1)) {
      check.first_bad_step = static_cast<int>(i);
      check.reason = PeeoCheck::Reason::EndpointReused;
      return check;
    }
    if (!g.has_edge(e)) {
      check.first_bad_step = static_cast<int>(i);
      check.reason = PeeoCheck::Reason::NotAnEdge;
      return check;
    }
    if (!detail::bisimplicial_within(g, alive, e.u, e.v)) {
      check.first_bad_step = static_cast<int>(i);
      check.reason = PeeoCheck::Reason::NotBisimplicial;
      return check;
    }
    alive &= ~(vbit(e.u) | vbit(e.v));
  }
  if (!edgeless_within(g, alive)) {
    check.reason = PeeoCheck::Reason::LeftoverEdges;
    return check;
  }
  check.ok = true;
  return check;
}

Graph random_chordal_bipartite(int n, int target_m, std::uint64_t seed) {
  if (n < 4 || n > 32) throw std::invalid_argument("random generator supports 4 <= n <= 32");
  if (target_m < n - 1) throw std::invalid_argument("target_m below n-1");
  const int max_product = (n / 2) * (n - n / 2);
  if (target_m > max_product) throw std::invalid_argument("target_m above part-size product");

  std::mt19937_64 rng(seed);
  auto rand_below = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };

  // Random bipartition, redrawn until target_m fits the part-size product.
  Mask xmask = 0;
  int p = 0;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw std::runtime_error("could not draw a compatible bipartition");
    xmask = rng() & full_mask(n);
    p = popcount(xmask);
    if (p == 0 || p == n) continue;
    if (static_cast<long long>(p) * (n - p) >= target_m) break;
  }
  const std::vector<int> xs = mask_vertices(xmask);
  const std::vector<int> ys = mask_vertices(full_mask(n) & ~xmask);

  // Random spanning tree: seed with one cross edge, then attach each
  // remaining vertex to a random inserted vertex of the other side.
  std::vector<std::pair<int, int>> tree;
  std::vector<int> in_x{xs[static_cast<std::size_t>(rand_below(xs.size()))]};
  std::vector<int> in_y{ys[static_cast<std::size_t>(rand_below(ys.size()))]};
  tree.emplace_back(in_x[0], in_y[0]);
  std::vector<int> rest;
  for (int v : xs)
    if (v != in_x[0]) rest.push_back(v);
  for (int v : ys)
    if (v != in_y[0]) rest.push_back(v);
  std::shuffle(rest.begin(), rest.end(), rng);
  for (int v : rest) {
    const bool v_in_x = (xmask >> v) & 1;
    auto& opposite = v_in_x ? in_y : in_x;
    tree.emplace_back(v, opposite[static_cast<std::size_t>(rand_below(opposite.size()))]);
    (v_in_x ? in_x : in_y).push_back(v);
  }
  Graph g = Graph::from_edges(n, tree);

  std::vector<Edge> absent;
  for (int x : xs)
    for (int y : ys)
      if (!g.has_edge(x, y)) absent.emplace_back(x, y);

  long long proposals = 64LL * n * n;
  while (g.size() < target_m && !absent.empty() && proposals-- > 0) {
    const std::size_t i = static_cast<std::size_t>(rand_below(absent.size()));
    const Graph candidate = g.with_edge(absent[i]);
    if (is_chordal_bipartite(candidate)) {
      g = candidate;
      absent[i] = absent.back();
      absent.pop_back();
    }
  }
  return g;
}

}  // namespace cbg
