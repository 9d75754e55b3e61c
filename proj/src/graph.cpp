#include "cbg/graph.hpp"

#include <algorithm>

namespace cbg {

std::vector<int> mask_vertices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (Mask t = m; t; t &= t - 1) out.push_back(first_vertex(t));
  return out;
}

Mask mask_of(std::span<const int> vertices) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxOrder) throw std::out_of_range("vertex out of range");
    m |= vbit(v);
  }
  return m;
}

graph6_error::graph6_error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)),
      offset_(offset) {}

Graph::Graph(int n) : n_(n), m_(0), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("order must be between 0 and 64");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self loops are not allowed");
    g.adj_[static_cast<std::size_t>(a)] |= vbit(b);
    g.adj_[static_cast<std::size_t>(b)] |= vbit(a);
  }
  int total = 0;
  for (Mask r : g.adj_) total += popcount(r);
  g.m_ = total / 2;
  return g;
}

int Graph::min_degree() const noexcept {
  int best = 0;
  bool first = true;
  for (Mask r : adj_) {
    int d = popcount(r);
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (Mask t = row(u) & ~full_mask(u + 1); t; t &= t - 1)
      out.emplace_back(u, first_vertex(t));
  return out;
}

Graph Graph::with_edge(Edge e) const {
  check_vertex(e.u);
  check_vertex(e.v);
  Graph g = *this;
  if (!has_edge(e)) {
    g.adj_[static_cast<std::size_t>(e.u)] |= vbit(e.v);
    g.adj_[static_cast<std::size_t>(e.v)] |= vbit(e.u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edge(Edge e) const {
  check_vertex(e.u);
  check_vertex(e.v);
  Graph g = *this;
  if (has_edge(e)) {
    g.adj_[static_cast<std::size_t>(e.u)] &= ~vbit(e.v);
    g.adj_[static_cast<std::size_t>(e.v)] &= ~vbit(e.u);
    --g.m_;
  }
  return g;
}

Graph graph_from_rows(int n, const Mask* rows) {
  Graph g(n);
  int total = 0;
  for (int v = 0; v < n; ++v) {
    g.adj_[static_cast<std::size_t>(v)] = rows[v];
    total += popcount(rows[v]);
  }
  g.m_ = total / 2;
  return g;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool printable_g6(unsigned c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);

  std::size_t pos = 0;
  if (line.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  const std::size_t size_pos = pos;

  auto byte_at = [&](std::size_t i) { return static_cast<unsigned char>(line[i]); };

  if (pos >= line.size()) throw graph6_error("missing size", pos);
  unsigned c = byte_at(pos);
  if (!printable_g6(c)) throw graph6_error("malformed size byte", pos);

  long long n = 0;
  if (c < 126) {
    n = c - 63;
    ++pos;
  } else {
    ++pos;
    int chunks = 3;
    if (pos < line.size() && byte_at(pos) == 126) {
      ++pos;
      chunks = 6;
    }
    for (int i = 0; i < chunks; ++i, ++pos) {
      if (pos >= line.size()) throw graph6_error("truncated size", line.size());
      unsigned d = byte_at(pos);
      if (!printable_g6(d)) throw graph6_error("malformed size byte", pos);
      n = (n << 6) | (d - 63);
    }
  }
  if (n > kMaxOrder) throw graph6_error("order exceeds 64", size_pos);

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos < nbytes) throw graph6_error("truncated bit body", line.size());
  if (line.size() - pos > nbytes) throw graph6_error("trailing bytes after bit body", pos + nbytes);

  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  long long k = 0;
  unsigned cur = 0;
  int avail = 0;
  std::size_t body_pos = pos;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (avail == 0) {
        unsigned b = byte_at(body_pos);
        if (!printable_g6(b)) throw graph6_error("malformed body byte", body_pos);
        cur = b - 63;
        avail = 6;
        ++body_pos;
      }
      --avail;
      if ((cur >> avail) & 1) {
        rows[static_cast<std::size_t>(i)] |= vbit(j);
        rows[static_cast<std::size_t>(j)] |= vbit(i);
      }
    }
  }
  if (avail > 0 && (cur & ((1u << avail) - 1)) != 0)
    throw graph6_error("nonzero padding bits", body_pos - 1);

  return graph_from_rows(static_cast<int>(n), rows.data());
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc <<= 1;
      if ((g.row(i) >> j) & 1) acc |= 1;
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph induced_subgraph(const Graph& g, Mask keep) {
  if (keep & ~g.vertex_mask()) throw std::invalid_argument("keep set is not a subset of V(G)");
  const std::vector<int> old_of = mask_vertices(keep);
  const int k = static_cast<int>(old_of.size());
  std::vector<Mask> rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    Mask adj = g.row(old_of[static_cast<std::size_t>(i)]) & keep;
    Mask r = 0;
    for (int j = 0; j < k; ++j)
      if ((adj >> old_of[static_cast<std::size_t>(j)]) & 1) r |= vbit(j);
    rows[static_cast<std::size_t>(i)] = r;
  }
  return graph_from_rows(k, rows.data());
}

Graph remove_vertices(const Graph& g, Mask drop) {
  if (drop & ~g.vertex_mask()) throw std::invalid_argument("S is not a subset of V(G)");
  return induced_subgraph(g, g.vertex_mask() & ~drop);
}

Graph eliminate_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("cannot eliminate a non-edge");
  return remove_vertices(g, vbit(e.u) | vbit(e.v));
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const Mask all = g.vertex_mask();
  Mask visited = 0, px = 0, py = 0;
  while (visited != all) {
    const int start = first_vertex(all & ~visited);
    Mask frontier = vbit(start);
    px |= frontier;
    visited |= frontier;
    bool x_side = true;
    while (frontier) {
      Mask next = 0;
      for (Mask t = frontier; t; t &= t - 1) next |= g.row(first_vertex(t));
      next &= ~visited;
      x_side = !x_side;
      (x_side ? px : py) |= next;
      visited |= next;
      frontier = next;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    const Mask same = ((px >> v) & 1) ? px : py;
    if (g.row(v) & same & ~vbit(v)) return std::nullopt;
  }
  return Bipartition{px, py};
}

bool is_complete_bipartite_between(const Graph& g, Mask a, Mask b) {
  if (a & b) throw std::invalid_argument("parts must be disjoint");
  if ((a | b) & ~g.vertex_mask()) throw std::invalid_argument("parts must be subsets of V(G)");
  for (Mask t = a; t; t &= t - 1)
    if ((g.row(first_vertex(t)) & b) != b) return false;
  return true;
}

}  // namespace cbg
