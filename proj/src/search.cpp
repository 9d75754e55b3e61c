#include "cbg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <istream>
#include <thread>
#include <unordered_set>

#include "bitcombs.hpp"
#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"

namespace cbg {

namespace {

int pop32(std::uint32_t m) { return std::popcount(m); }

// Lexicographic minimum of the row-major biadjacency bit string over all row
// and column permutations. Rows are chosen one at a time; columns are kept
// as ordered groups of indistinguishable-so-far columns, each group emitting
// its zeros before its ones, which realizes the best column order for any
// fixed row order. Ties branch, but rows with identical raw masks are
// interchangeable and explored once.
class LexMinBiadjacency {
 public:
  LexMinBiadjacency(int p, int q, const std::uint32_t* rows) : p_(p), q_(q), rows_(rows) {}

  std::uint64_t solve() {
    best_ = ~std::uint64_t{0};
    have_best_ = false;
    std::uint32_t groups[32] = {};
    int gcount = 0;
    if (q_ > 0) groups[gcount++] = (q_ >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << q_) - 1);
    rec(0, 0, 0, groups, gcount);
    return have_best_ ? best_ : 0;
  }

 private:
  void rec(int depth, std::uint32_t used, std::uint64_t val, const std::uint32_t* groups,
           int gcount) {
    if (depth == p_) {
      if (!have_best_ || val < best_) {
        best_ = val;
        have_best_ = true;
      }
      return;
    }
    std::uint64_t best_frag = ~std::uint64_t{0};
    int cand[16];
    int ncand = 0;
    for (int r = 0; r < p_; ++r) {
      if ((used >> r) & 1) continue;
      std::uint64_t frag = 0;
      for (int gi = 0; gi < gcount; ++gi) {
        const int s = pop32(groups[gi]);
        const int c = pop32(groups[gi] & rows_[r]);
        frag = (frag << s) | ((std::uint64_t{1} << c) - 1);
      }
      if (frag < best_frag) {
        best_frag = frag;
        ncand = 0;
        cand[ncand++] = r;
      } else if (frag == best_frag && ncand < 16) {
        cand[ncand++] = r;
      }
    }
    const std::uint64_t nval = (val << q_) | best_frag;
    if (have_best_ && nval > (best_ >> (q_ * (p_ - depth - 1)))) return;

    std::uint32_t seen[16];
    int nseen = 0;
    for (int ci = 0; ci < ncand; ++ci) {
      const int r = cand[ci];
      bool dup = false;
      for (int si = 0; si < nseen && !dup; ++si) dup = seen[si] == rows_[r];
      if (dup) continue;
      seen[nseen++] = rows_[r];

      std::uint32_t ng[32];
      int ngc = 0;
      for (int gi = 0; gi < gcount; ++gi) {
        const std::uint32_t g0 = groups[gi] & ~rows_[r];
        const std::uint32_t g1 = groups[gi] & rows_[r];
        if (g0) ng[ngc++] = g0;
        if (g1) ng[ngc++] = g1;
      }
      rec(depth + 1, used | (std::uint32_t{1} << r), nval, ng, ngc);
    }
  }

  int p_, q_;
  const std::uint32_t* rows_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

std::string biadjacency_to_graph6(int p, int q, std::uint64_t value) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      if ((value >> ((p - 1 - i) * q + (q - 1 - j))) & 1) edges.emplace_back(i, p + j);
  return to_graph6(Graph::from_edges(p + q, edges));
}

void transpose_rows(int p, int q, const std::uint32_t* rows, std::uint32_t* cols) {
  for (int j = 0; j < q; ++j) {
    std::uint32_t c = 0;
    for (int i = 0; i < p; ++i)
      if ((rows[i] >> j) & 1) c |= std::uint32_t{1} << i;
    cols[j] = c;
  }
}

}  // namespace

namespace detail {

std::string canonical_biadjacency_form(int p, int q, const std::uint32_t* rows) {
  std::uint32_t cols[32];
  if (p > q) {
    transpose_rows(p, q, rows, cols);
    return canonical_biadjacency_form(q, p, cols);
  }
  if (q > 31 || static_cast<long long>(p) * q > 62)
    throw std::invalid_argument("biadjacency canonical form budget exceeded");
  std::uint64_t value = LexMinBiadjacency(p, q, rows).solve();
  if (p == q) {
    transpose_rows(p, q, rows, cols);
    value = std::min(value, LexMinBiadjacency(p, q, cols).solve());
  }
  return biadjacency_to_graph6(p, q, value);
}

}  // namespace detail

std::string canonical_form(const Graph& g) {
  if (g.order() > 14) throw std::invalid_argument("canonical form budget is n <= 14");
  if (!is_connected(g)) throw std::invalid_argument("canonical form needs a connected graph");
  const auto bp = bipartition(g);
  if (!bp) throw std::invalid_argument("canonical form needs a bipartite graph");
  const std::vector<int> xs = mask_vertices(bp->part_x);
  const std::vector<int> ys = mask_vertices(bp->part_y);
  std::uint32_t rows[32] = {};
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (g.has_edge(xs[i], ys[j])) rows[i] |= std::uint32_t{1} << j;
  return detail::canonical_biadjacency_form(static_cast<int>(xs.size()),
                                            static_cast<int>(ys.size()), rows);
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  examined += o.examined;
  pruned_min_degree += o.pruned_min_degree;
  pruned_disconnected += o.pruned_disconnected;
  pruned_kappa += o.pruned_kappa;
  pruned_not_chordal_bipartite += o.pruned_not_chordal_bipartite;
  passed += o.passed;
  return *this;
}

namespace {

struct LevelPart {
  SearchStats stats;
  std::vector<std::string> canon;
};

// Tests every cell mask of one rank range of C(p*q, m) combinations.
// Pipeline: degree floor, connectivity, kappa, chordality, canonical form.
void scan_range(int p, int q, int m, int k, std::uint64_t lo, std::uint64_t hi,
                const std::atomic<bool>* stop, LevelPart& out) {
  const std::uint32_t qmask = (std::uint32_t{1} << q) - 1;
  Mask colmask[16];
  for (int j = 0; j < q; ++j) {
    Mask cm = 0;
    for (int i = 0; i < p; ++i) cm |= Mask{1} << (i * q + j);
    colmask[j] = cm;
  }

  std::uint64_t mask = detail::unrank_colex(lo, m);
  std::uint32_t rows[16];
  Mask grows[32];
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (stop && ((r & 1023) == 0) && stop->load(std::memory_order_relaxed)) return;
    const std::uint64_t cells = mask;
    if (r + 1 < hi) mask = detail::gosper_next(mask);

    ++out.stats.examined;
    bool deg_ok = true;
    for (int i = 0; i < p && deg_ok; ++i) {
      rows[i] = static_cast<std::uint32_t>(cells >> (i * q)) & qmask;
      deg_ok = pop32(rows[i]) >= k;
    }
    for (int j = 0; j < q && deg_ok; ++j) deg_ok = popcount(cells & colmask[j]) >= k;
    if (!deg_ok) {
      ++out.stats.pruned_min_degree;
      continue;
    }

    std::uint32_t xreach = 1, yreach = 0;
    for (bool changed = true; changed;) {
      changed = false;
      std::uint32_t ny = yreach;
      for (int i = 0; i < p; ++i)
        if ((xreach >> i) & 1) ny |= rows[i];
      if (ny != yreach) {
        yreach = ny;
        changed = true;
      }
      std::uint32_t nx = xreach;
      for (int i = 0; i < p; ++i)
        if (rows[i] & yreach) nx |= std::uint32_t{1} << i;
      if (nx != xreach) {
        xreach = nx;
        changed = true;
      }
    }
    if (xreach != (std::uint32_t{1} << p) - 1 || yreach != qmask) {
      ++out.stats.pruned_disconnected;
      continue;
    }

    for (int i = 0; i < p; ++i) grows[i] = Mask{rows[i]} << p;
    for (int j = 0; j < q; ++j) {
      Mask mm = 0;
      for (int i = 0; i < p; ++i)
        if ((rows[i] >> j) & 1) mm |= vbit(i);
      grows[p + j] = mm;
    }
    const Graph g = graph_from_rows(p + q, grows);
    if (!vertex_connectivity_at_least(g, k)) {
      ++out.stats.pruned_kappa;
      continue;
    }
    if (!is_chordal_bipartite(g)) {
      ++out.stats.pruned_not_chordal_bipartite;
      continue;
    }
    ++out.stats.passed;
    out.canon.push_back(detail::canonical_biadjacency_form(p, q, rows));
  }
}

void run_parallel(int jobs, std::vector<std::function<void()>>& tasks) {
  if (jobs <= 1 || tasks.size() <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) tasks[i]();
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<int>(jobs, static_cast<int>(tasks.size()));
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

SearchRecord enumerate_min_size(int n, int k, int jobs, Deadline deadline) {
  if (n < 4 || n > 10) throw std::invalid_argument("built-in exhaustive search supports 4 <= n <= 10");
  if (k < 2) throw std::invalid_argument("search requires k >= 2");
  jobs = std::clamp(jobs, 1, 64);

  SearchRecord rec;
  rec.n = n;
  rec.k = k;

  std::vector<std::pair<int, int>> shapes;
  for (int p = std::max(2, k); p <= n / 2; ++p) shapes.emplace_back(p, n - p);
  if (shapes.empty()) return rec;  // no shape can reach connectivity k

  int m_hi = 0;
  for (auto [p, q] : shapes) m_hi = std::max(m_hi, p * q);
  const int m_lo = std::max(n, (k * n + 1) / 2);

  for (int m = m_lo; m <= m_hi; ++m) {
    std::vector<LevelPart> parts;
    std::vector<std::function<void()>> tasks;
    std::atomic<bool> stop{false};
    for (auto [p, q] : shapes) {
      if (m > p * q || m < k * q) continue;  // every column needs degree >= k
      const std::uint64_t total = detail::binom(p * q, m);
      const std::uint64_t nchunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
      const std::size_t base = parts.size();
      parts.resize(base + nchunks);
      for (std::uint64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t lo = total * c / nchunks;
        const std::uint64_t hi = total * (c + 1) / nchunks;
        tasks.push_back([=, &parts, &stop] { scan_range(p, q, m, k, lo, hi, &stop, parts[base + c]); });
      }
    }

    // Cooperative budget: a watchdog trips the stop flag once the deadline
    // passes; a tripped level poisons the whole record.
    std::atomic<bool> watchdog_quit{false};
    std::thread watchdog;
    if (deadline) {
      watchdog = std::thread([&] {
        while (!watchdog_quit.load()) {
          if (std::chrono::steady_clock::now() >= *deadline) {
            stop.store(true);
            return;
          }
          std::this_thread::sleep_for(std::chrono::milliseconds(2));
        }
      });
    }
    run_parallel(jobs, tasks);
    if (watchdog.joinable()) {
      watchdog_quit.store(true);
      watchdog.join();
    }

    std::vector<std::string> canon;
    for (auto& part : parts) {
      rec.stats += part.stats;
      canon.insert(canon.end(), part.canon.begin(), part.canon.end());
    }
    if (stop.load()) {
      rec.truncated = true;
      rec.exhaustive = false;
      return rec;
    }
    if (!canon.empty()) {
      std::sort(canon.begin(), canon.end());
      canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
      for (const std::string& w : canon) {
        const Graph g = parse_graph6(w);
        if (g.size() != m || !vertex_connectivity_at_least(g, k) || !is_chordal_bipartite(g))
          throw std::logic_error("witness failed re-verification");
      }
      rec.m_min = m;
      rec.witnesses = std::move(canon);
      return rec;
    }
  }
  return rec;
}

std::vector<SearchRecord> conjecture_table(int k, int n_lo, int n_hi, int jobs, Deadline deadline) {
  if (k < 3) throw std::invalid_argument("the conjecture table concerns k >= 3");
  if (n_lo < 4 || n_hi > 10 || n_lo > n_hi)
    throw std::invalid_argument("built-in conjecture table covers 4 <= n <= 10");
  std::vector<SearchRecord> rows;
  for (int n = n_lo; n <= n_hi; ++n) rows.push_back(enumerate_min_size(n, k, jobs, deadline));
  return rows;
}

void for_each_connected_bipartite_class(int n, const std::function<bool(const Graph&)>& fn) {
  if (n < 0 || n > 10) throw std::invalid_argument("class enumeration budget is n <= 10");
  if (n == 0) return;
  if (n == 1) {
    fn(Graph(1));
    return;
  }
  for (int p = 1; p <= n / 2; ++p) {
    const int q = n - p;
    const std::uint32_t qmask = (std::uint32_t{1} << q) - 1;
    std::unordered_set<std::string> seen;
    std::uint32_t rows[16];
    Mask grows[32];
    const std::uint64_t end = std::uint64_t{1} << (p * q);
    for (std::uint64_t cells = 0; cells < end; ++cells) {
      for (int i = 0; i < p; ++i) rows[i] = static_cast<std::uint32_t>(cells >> (i * q)) & qmask;
      std::uint32_t xreach = 1, yreach = 0;
      for (bool changed = true; changed;) {
        changed = false;
        std::uint32_t ny = yreach;
        for (int i = 0; i < p; ++i)
          if ((xreach >> i) & 1) ny |= rows[i];
        if (ny != yreach) {
          yreach = ny;
          changed = true;
        }
        std::uint32_t nx = xreach;
        for (int i = 0; i < p; ++i)
          if (rows[i] & yreach) nx |= std::uint32_t{1} << i;
        if (nx != xreach) {
          xreach = nx;
          changed = true;
        }
      }
      if (xreach != (std::uint32_t{1} << p) - 1 || yreach != qmask) continue;
      std::string canon = detail::canonical_biadjacency_form(p, q, rows);
      if (!seen.insert(canon).second) continue;
      for (int i = 0; i < p; ++i) grows[i] = Mask{rows[i]} << p;
      for (int j = 0; j < q; ++j) {
        Mask mm = 0;
        for (int i = 0; i < p; ++i)
          if ((rows[i] >> j) & 1) mm |= vbit(i);
        grows[p + j] = mm;
      }
      if (fn(graph_from_rows(p + q, grows))) return;
    }
  }
}

std::vector<Graph> connected_bipartite_classes(int n) {
  if (n > 9) throw std::invalid_argument("class collection budget is n <= 9");
  std::vector<Graph> out;
  for_each_connected_bipartite_class(n, [&](const Graph& g) {
    out.push_back(g);
    return false;
  });
  return out;
}

std::optional<Graph> peeo_counterexample_search(int n_max) {
  if (n_max > 10) throw std::invalid_argument("counterexample scan budget is n_max <= 10");
  std::optional<Graph> found;
  for (int n = 4; n <= n_max && !found; ++n) {
    for_each_connected_bipartite_class(n, [&](const Graph& g) {
      if (is_chordal_bipartite(g)) return false;
      if (!find_peeo(g, PeeoMode::Backtracking)) return false;
      found = g;
      return true;
    });
  }
  return found;
}

FilterStats filter_stream(std::istream& in, const FilterConfig& cfg,
                          const std::function<void(const std::string&, const Graph&)>& emit) {
  FilterStats stats;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++stats.lines_read;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const graph6_error&) {
      ++stats.malformed;
      continue;
    }
    if (cfg.edges_exactly && g.size() != *cfg.edges_exactly) continue;
    if (cfg.edges_at_most && g.size() > *cfg.edges_at_most) continue;
    if (cfg.min_degree > 0 && g.min_degree() < cfg.min_degree) continue;
    if (cfg.bipartite && !bipartition(g)) continue;
    if (cfg.kappa_at_least > 0) {
      if (g.order() == 0 || !vertex_connectivity_at_least(g, cfg.kappa_at_least)) continue;
    }
    if (cfg.chordal_bipartite && !is_chordal_bipartite(g)) continue;
    ++stats.passed;
    if (!stats.min_edges_passed || g.size() < *stats.min_edges_passed) {
      stats.min_edges_passed = g.size();
      stats.min_edges_witness = to_graph6(g);
    }
    emit(line, g);
  }
  return stats;
}

}  // namespace cbg
