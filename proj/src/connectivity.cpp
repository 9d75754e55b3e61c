#include "cbg/connectivity.hpp"

#include <algorithm>
#include <array>

#include "bitcombs.hpp"

namespace cbg {

namespace {

Mask reach_from(const Graph& g, int start, Mask within) {
  Mask comp = vbit(start);
  Mask frontier = comp;
  while (frontier) {
    Mask next = 0;
    for (Mask t = frontier; t; t &= t - 1) next |= g.row(first_vertex(t));
    next &= within & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

// Dinic on the vertex-split network: node 2v is the entry of v, 2v+1 the
// exit, joined by a unit-capacity arc. Undirected edges become infinite
// exit->entry arcs both ways.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.order()), head_(2 * n_, -1) {
    const int inf = n_ + 1;
    arcs_.reserve(4 * static_cast<std::size_t>(g.size()) + 2 * static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) add(entry(v), exit(v), 1);
    for (int u = 0; u < n_; ++u)
      for (Mask t = g.row(u) & ~full_mask(u + 1); t; t &= t - 1) {
        const int v = first_vertex(t);
        add(exit(u), entry(v), inf);
        add(exit(v), entry(u), inf);
      }
    base_arc_count_ = arcs_.size();
  }

  static int entry(int v) { return 2 * v; }
  static int exit(int v) { return 2 * v + 1; }

  // Max flow from exit(s) to entry(t); augmentation stops at `cap`.
  int max_flow(int s, int t, int cap) {
    reset();
    const int src = exit(s), snk = entry(t);
    int flow = 0;
    while (flow < cap && bfs(src, snk)) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      while (flow < cap) {
        const int pushed = dfs(src, snk, cap - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  void add(int a, int b, int c) {
    arcs_.push_back({b, head_[static_cast<std::size_t>(a)], c});
    head_[static_cast<std::size_t>(a)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({a, head_[static_cast<std::size_t>(b)], 0});
    head_[static_cast<std::size_t>(b)] = static_cast<int>(arcs_.size()) - 1;
  }

  void reset() {
    if (caps_.size() != arcs_.size()) {
      caps_.resize(arcs_.size());
      for (std::size_t i = 0; i < arcs_.size(); ++i) caps_[i] = arcs_[i].cap;
    } else {
      for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = caps_[i];
    }
    level_.assign(head_.size(), -1);
    it_.assign(head_.begin(), head_.end());
  }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int v = queue_[qi];
      for (int a = head_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue_.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int v, int t, int limit) {
    if (v == t || limit == 0) return limit;
    for (int& a = it_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] == level_[static_cast<std::size_t>(v)] + 1) {
        const int pushed = dfs(arc.to, t, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[static_cast<std::size_t>(a ^ 1)].cap += pushed;
          return pushed;
        }
      }
    }
    level_[static_cast<std::size_t>(v)] = -1;
    return 0;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> caps_;
  std::vector<int> level_;
  std::vector<int> it_;
  std::vector<int> queue_;
  std::size_t base_arc_count_ = 0;
};

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

// Shared body of vertex_connectivity and the >= k test: the minimum of the
// pair connectivities over (min-degree vertex v, each non-neighbor of v) and
// (non-adjacent pairs of neighbors of v) equals kappa. Flows are capped at
// `cap`; returns min(kappa, cap).
int kappa_capped(const Graph& g, int cap) {
  const int n = g.order();
  int v0 = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(v0)) v0 = v;
  int best = std::min(cap, g.degree(v0));

  SplitFlow net(g);
  for (Mask t = g.vertex_mask() & ~g.row(v0) & ~vbit(v0); t && best > 0; t &= t - 1)
    best = std::min(best, net.max_flow(v0, first_vertex(t), best));

  const std::vector<int> nb = mask_vertices(g.row(v0));
  for (std::size_t i = 0; i < nb.size() && best > 0; ++i)
    for (std::size_t j = i + 1; j < nb.size() && best > 0; ++j)
      if (!g.has_edge(nb[i], nb[j])) best = std::min(best, net.max_flow(nb[i], nb[j], best));
  return best;
}

template <typename Fn>
void for_each_subset_of(Mask within, int size, Fn&& fn) {
  const std::vector<int> verts = mask_vertices(within);
  const int n = static_cast<int>(verts.size());
  if (size > n) return;
  if (size == 0) {
    fn(Mask{0});
    return;
  }
  std::uint64_t idx = full_mask(size);
  const std::uint64_t total = detail::binom(n, size);
  for (std::uint64_t r = 0; r < total; ++r) {
    Mask s = 0;
    for (std::uint64_t t = idx; t; t &= t - 1) s |= vbit(verts[static_cast<std::size_t>(first_vertex(t))]);
    fn(s);
    idx = detail::gosper_next(idx);
  }
}

}  // namespace

std::vector<Mask> components_within(const Graph& g, Mask within) {
  std::vector<Mask> out;
  Mask todo = within & g.vertex_mask();
  while (todo) {
    const Mask comp = reach_from(g, first_vertex(todo), todo);
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

std::vector<Mask> components(const Graph& g) { return components_within(g, g.vertex_mask()); }

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reach_from(g, 0, g.vertex_mask()) == g.vertex_mask();
}

bool is_vertex_cut(const Graph& g, Mask s) {
  if (s & ~g.vertex_mask()) throw std::invalid_argument("S is not a subset of V(G)");
  const Mask rest = g.vertex_mask() & ~s;
  if (!rest) return false;
  const Mask comp = reach_from(g, first_vertex(rest), rest);
  return comp != rest;
}

Mask cut_vertices(const Graph& g) {
  Mask out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (is_vertex_cut(g, vbit(v))) out |= vbit(v);
  return out;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("connectivity of the empty graph is undefined");
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  return kappa_capped(g, n);
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("connectivity of the empty graph is undefined");
  if (is_complete(g)) return n - 1 >= k;
  if (g.min_degree() < k) return false;
  if (!is_connected(g)) return false;
  return kappa_capped(g, k) >= k;
}

std::vector<Mask> minimum_vertex_cuts(const Graph& g) {
  if (g.order() < 2 || is_complete(g))
    throw std::invalid_argument("complete graphs have no vertex cut");
  if (g.order() > 24) throw std::invalid_argument("minimum cut enumeration budget is n <= 24");
  const int k = vertex_connectivity(g);
  if (k > 5) throw std::invalid_argument("minimum cut enumeration budget is kappa <= 5");
  std::vector<Mask> out;
  for_each_subset_of(g.vertex_mask(), k, [&](Mask s) {
    if (is_vertex_cut(g, s)) out.push_back(s);
  });
  return out;
}

std::vector<Mask> all_vertex_cuts_up_to(const Graph& g, Mask within, int s_max) {
  if (s_max > 6) throw std::invalid_argument("cut enumeration budget is s_max <= 6");
  if (within & ~g.vertex_mask()) throw std::invalid_argument("within is not a subset of V(G)");
  std::vector<Mask> out;
  for (int s = 1; s <= s_max; ++s) {
    for_each_subset_of(within, s, [&](Mask cand) {
      const Mask rest = within & ~cand;
      if (!rest) return;
      const Mask comp = reach_from(g, first_vertex(rest), rest);
      if (comp != rest) out.push_back(cand);
    });
  }
  return out;
}

std::vector<Mask> all_vertex_cuts_up_to(const Graph& g, int s_max) {
  return all_vertex_cuts_up_to(g, g.vertex_mask(), s_max);
}

CutReport cut_report(const Graph& g, Mask s) {
  if (!is_vertex_cut(g, s)) throw std::invalid_argument("S is not a vertex cut");
  CutReport r;
  r.cut = s;
  r.components = components_within(g, g.vertex_mask() & ~s);
  r.component_count = static_cast<int>(r.components.size());
  return r;
}

std::vector<SComponent> s_components(const Graph& g, Mask s) {
  const CutReport report = cut_report(g, s);
  std::vector<SComponent> out;
  out.reserve(report.components.size());
  for (Mask f : report.components) {
    SComponent sc;
    sc.vertices = s | f;
    sc.graph = induced_subgraph(g, sc.vertices);
    sc.labels = mask_vertices(sc.vertices);
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace cbg
