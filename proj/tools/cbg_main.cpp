// Command line front end: every subcommand reads graph6 (arguments or
// stdin), human-readable tables by default, schema-stable JSON lines with
// --json. Heartbeats go to stderr; worker count never changes output bytes.

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"
#include "cbg/constructions.hpp"
#include "cbg/json_io.hpp"
#include "cbg/search.hpp"
#include "cbg/verify.hpp"

namespace {

using cbg::json;

struct CommonOpts {
  bool as_json = false;
  int jobs = 1;
  long long budget_ms = 0;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--json", opts.as_json, "emit JSON lines instead of human output");
  cmd->add_option("--jobs", opts.jobs, "worker threads (never affects output bytes)");
  cmd->add_option("--budget-ms", opts.budget_ms, "time budget in milliseconds (0 = none)");
  cmd->add_option("--seed", opts.seed, "random seed where applicable");
}

void print_header(const CommonOpts& opts, const std::string& command, json params) {
  if (!opts.as_json) return;
  json h{{"tool", "cbg"},
         {"schema", 1},
         {"command", command},
         {"params", std::move(params)},
         {"seed", opts.seed},
         {"budget_ms", opts.budget_ms}};
  std::cout << h.dump() << "\n";
}

cbg::Deadline deadline_of(const CommonOpts& opts) {
  if (opts.budget_ms <= 0) return {};
  return std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget_ms);
}

// Runs fn while a watcher prints heartbeats to stderr every two seconds.
template <typename Fn>
auto with_heartbeat(Fn&& fn) {
  std::atomic<bool> done{false};
  std::thread watcher([&] {
    const auto t0 = std::chrono::steady_clock::now();
    int ticks = 0;
    while (!done.load()) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      if (++ticks % 20 == 0) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        std::fprintf(stderr, "cbg: working, elapsed %lld ms\n", static_cast<long long>(ms));
      }
    }
  });
  auto result = fn();
  done.store(true);
  watcher.join();
  return result;
}

// Graph inputs: positional graph6 strings, or stdin lines when none given.
// fn returns false to flag an error on that input.
int for_each_input(const std::vector<std::string>& args,
                   const std::function<bool(const std::string&)>& fn) {
  int rc = 0;
  auto feed = [&](const std::string& line) {
    if (!line.empty() && !fn(line)) rc = 1;
  };
  if (args.empty() || (args.size() == 1 && args[0] == "-")) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      feed(line);
    }
  } else {
    for (const auto& a : args) feed(a);
  }
  return rc;
}

void emit(const CommonOpts& opts, const json& j, const std::string& human) {
  if (opts.as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::string edge_list_human(const std::vector<cbg::Edge>& edges) {
  std::string s;
  for (const auto& e : edges) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  }
  return s.empty() ? "-" : s;
}

json error_record(const std::string& input, const std::string& message) {
  return json{{"input", input}, {"error", message}};
}

int run_recognize(const CommonOpts& opts, const std::vector<std::string>& inputs) {
  print_header(opts, "recognize", json::object());
  return for_each_input(inputs, [&](const std::string& line) {
    try {
      const cbg::Graph g = cbg::parse_graph6(line);
      const cbg::Recognition r = cbg::recognize_chordal_bipartite(g);
      json j{{"graph6", cbg::to_graph6(g)}};
      j.update(cbg::json_of(r));
      emit(opts, j,
           cbg::to_graph6(g) + "  chordal-bipartite=" + (r.chordal_bipartite() ? "yes" : "no") +
               "  reason=" + std::string(j["reason"]));
      return true;
    } catch (const std::exception& ex) {
      emit(opts, error_record(line, ex.what()), std::string("error: ") + ex.what());
      return false;
    }
  });
}

int run_kappa(const CommonOpts& opts, const std::vector<std::string>& inputs) {
  print_header(opts, "kappa", json::object());
  return for_each_input(inputs, [&](const std::string& line) {
    try {
      const cbg::Graph g = cbg::parse_graph6(line);
      const int k = cbg::vertex_connectivity(g);
      emit(opts, json{{"graph6", cbg::to_graph6(g)}, {"kappa", k}},
           cbg::to_graph6(g) + "  kappa=" + std::to_string(k));
      return true;
    } catch (const std::exception& ex) {
      emit(opts, error_record(line, ex.what()), std::string("error: ") + ex.what());
      return false;
    }
  });
}

int run_bisimplicial(const CommonOpts& opts, const std::vector<std::string>& inputs) {
  print_header(opts, "bisimplicial", json::object());
  return for_each_input(inputs, [&](const std::string& line) {
    try {
      const cbg::Graph g = cbg::parse_graph6(line);
      const auto edges = cbg::bisimplicial_edges(g);
      json arr = json::array();
      for (const auto& e : edges) arr.push_back(json::array({e.u, e.v}));
      emit(opts, json{{"graph6", cbg::to_graph6(g)}, {"edges", arr}},
           cbg::to_graph6(g) + "  bisimplicial: " + edge_list_human(edges));
      return true;
    } catch (const std::exception& ex) {
      emit(opts, error_record(line, ex.what()), std::string("error: ") + ex.what());
      return false;
    }
  });
}

int run_eliminate(const CommonOpts& opts, const std::string& g6, int u, int v) {
  print_header(opts, "eliminate", json{{"edge", json::array({u, v})}});
  try {
    const cbg::Graph g = cbg::parse_graph6(g6);
    const cbg::Graph h = cbg::eliminate_edge(g, cbg::Edge(u, v));
    emit(opts,
         json{{"graph6", cbg::to_graph6(g)},
              {"edge", json::array({u, v})},
              {"result", cbg::to_graph6(h)}},
         cbg::to_graph6(h));
    return 0;
  } catch (const std::exception& ex) {
    emit(opts, error_record(g6, ex.what()), std::string("error: ") + ex.what());
    return 1;
  }
}

int run_peeo(const CommonOpts& opts, const std::string& g6, const std::string& mode) {
  print_header(opts, "peeo", json{{"mode", mode}});
  try {
    const cbg::Graph g = cbg::parse_graph6(g6);
    const auto order =
        cbg::find_peeo(g, mode == "backtracking" ? cbg::PeeoMode::Backtracking : cbg::PeeoMode::Greedy);
    json j{{"graph6", cbg::to_graph6(g)}, {"mode", mode}, {"found", order.has_value()}};
    if (order) {
      json steps = json::array();
      for (const auto& e : order->steps) steps.push_back(json::array({e.u, e.v}));
      j["steps"] = steps;
      j["verified"] = static_cast<bool>(cbg::verify_peeo(g, *order));
    } else {
      j["steps"] = nullptr;
      j["verified"] = nullptr;
    }
    emit(opts, j, order ? "peeo: " + edge_list_human(order->steps) : "no peeo");
    return 0;
  } catch (const std::exception& ex) {
    emit(opts, error_record(g6, ex.what()), std::string("error: ") + ex.what());
    return 1;
  }
}

int run_construct(const CommonOpts& opts, const std::string& family, const std::vector<int>& params) {
  print_header(opts, "construct", json{{"family", family}, {"args", params}});
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument(family + " expects " + std::to_string(count) + " parameter(s)");
  };
  try {
    cbg::NamedGraph ng;
    if (family == "path") {
      need(1);
      ng.graph = cbg::path(params[0]);
      ng.name = "path(" + std::to_string(params[0]) + ")";
    } else if (family == "cycle") {
      need(1);
      ng.graph = cbg::cycle(params[0]);
      ng.name = "cycle(" + std::to_string(params[0]) + ")";
    } else if (family == "complete-bipartite") {
      need(2);
      ng.graph = cbg::complete_bipartite(params[0], params[1]);
      ng.name = "K(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")";
    } else if (family == "grid") {
      need(2);
      ng.graph = cbg::grid(params[0], params[1]);
      ng.name = "grid(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")";
    } else if (family == "extremal-even") {
      need(1);
      ng = cbg::extremal_even(params[0]);
    } else if (family == "extremal-odd") {
      need(1);
      ng = cbg::extremal_odd(params[0]);
    } else if (family == "figure4") {
      need(0);
      ng = cbg::figure4_graph();
    } else if (family == "random-chordal-bipartite") {
      need(2);
      ng.graph = cbg::random_chordal_bipartite(params[0], params[1], opts.seed);
      ng.name = "random(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")";
    } else {
      throw std::invalid_argument("unknown family: " + family);
    }
    // Families without built-in claims get them recomputed on the spot.
    if (ng.claims.edge_count == 0 && ng.claims.kappa == 0 && !ng.claims.chordal_bipartite) {
      ng.claims.edge_count = ng.graph.size();
      ng.claims.kappa = ng.graph.order() > 0 ? cbg::vertex_connectivity(ng.graph) : 0;
      ng.claims.chordal_bipartite = cbg::is_chordal_bipartite(ng.graph);
    }
    json j = cbg::json_of(ng);
    j["verified"] = cbg::verify_named_claims(ng);
    emit(opts, j,
         ng.name + "  " + cbg::to_graph6(ng.graph) + "  m=" + std::to_string(ng.claims.edge_count) +
             " kappa=" + std::to_string(ng.claims.kappa) +
             " chordal-bipartite=" + (ng.claims.chordal_bipartite ? "yes" : "no"));
    return 0;
  } catch (const std::exception& ex) {
    emit(opts, error_record(family, ex.what()), std::string("error: ") + ex.what());
    return 1;
  }
}

int run_verify(const CommonOpts& opts, const std::string& checker,
               const std::vector<std::string>& inputs, int cut_budget) {
  print_header(opts, "verify", json{{"checker", checker}, {"cut_budget", cut_budget}});
  return for_each_input(inputs, [&](const std::string& line) {
    json j;
    std::string human;
    try {
      const cbg::Graph g = cbg::parse_graph6(line);
      const std::string g6 = cbg::to_graph6(g);
      j["graph6"] = g6;
      j["checker"] = checker;
      if (checker == "theorem") {
        const auto v = cbg::check_theorem(g);
        j.update(cbg::json_of(v));
        human = g6 + "  theorem " + (v.vacuous ? "vacuous" : (v.satisfied ? "ok" : "VIOLATED"));
      } else if (checker == "lemma1") {
        bool ok = true;
        std::uint64_t checked = 0;
        const int smax = std::min(cut_budget, g.order() - 1);
        for (cbg::Mask s = 0; s < (cbg::Mask{1} << g.order()) && ok; ++s) {
          if (cbg::popcount(s) > smax || s == g.vertex_mask()) continue;
          ++checked;
          ok = cbg::check_lemma1(g, s);
        }
        j["ok"] = ok;
        j["subsets_checked"] = checked;
        human = g6 + "  lemma1 " + (ok ? "ok" : "VIOLATED");
      } else if (checker == "lemma3") {
        const bool ok = cbg::check_lemma3(g);
        j["ok"] = ok;
        human = g6 + "  lemma3 " + (ok ? "ok" : "VIOLATED");
      } else if (checker == "lemma5") {
        const int kappa = cbg::vertex_connectivity(g);
        bool ok = true;
        int instances = 0;
        for (const auto& e : cbg::bisimplicial_edges(g)) {
          const cbg::Mask alive = g.vertex_mask() & ~cbg::vbit(e.u) & ~cbg::vbit(e.v);
          for (cbg::Mask s :
               cbg::all_vertex_cuts_up_to(g, alive, std::min(kappa, std::min(cut_budget, 6)))) {
            ++instances;
            if (!cbg::check_lemma5(g, e, s).all_ok()) ok = false;
          }
        }
        j["ok"] = ok;
        j["instances"] = instances;
        j["vacuous"] = instances == 0;
        human = g6 + "  lemma5 " + (instances == 0 ? "vacuous" : (ok ? "ok" : "VIOLATED"));
      } else if (checker == "lemma6") {
        const bool ok = cbg::check_lemma6(g);
        j["ok"] = ok;
        human = g6 + "  lemma6 " + (ok ? "ok" : "VIOLATED");
      } else if (checker == "claims") {
        const auto r = cbg::check_proof_claims(g);
        j.update(cbg::json_of(r));
        human = g6 + "  claims " + (r.vacuous ? "vacuous" : (r.ok ? "ok" : "VIOLATED"));
      } else {
        throw std::invalid_argument("unknown checker: " + checker);
      }
      emit(opts, j, human);
      return true;
    } catch (const std::exception& ex) {
      emit(opts, error_record(line, ex.what()), std::string("error: ") + ex.what());
      return false;
    }
  });
}

int run_search(const CommonOpts& opts, int n, int k) {
  print_header(opts, "search", json{{"n", n}, {"k", k}});
  try {
    const auto rec = with_heartbeat([&] { return cbg::enumerate_min_size(n, k, opts.jobs, deadline_of(opts)); });
    emit(opts, cbg::json_of(rec),
         "n=" + std::to_string(n) + " k=" + std::to_string(k) + "  m_min=" +
             (rec.m_min ? std::to_string(*rec.m_min) : std::string("none")) + "  classes=" +
             std::to_string(rec.witnesses.size()) +
             (rec.truncated ? "  (budget truncated)" : ""));
    return rec.truncated ? 2 : 0;
  } catch (const std::exception& ex) {
    emit(opts, error_record("search", ex.what()), std::string("error: ") + ex.what());
    return 1;
  }
}

// Sampled rows: ingest an external graph6 corpus, bucket by order, report
// the smallest size seen per order. Upper bounds only, never minima.
int run_conjecture_stream(const CommonOpts& opts, int k, const std::string& path) {
  print_header(opts, "conjecture", json{{"k", k}, {"stream", path}});
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      emit(opts, error_record(path, "cannot open stream"), "error: cannot open " + path);
      return 1;
    }
    in = &file;
  }
  cbg::FilterConfig cfg;
  cfg.chordal_bipartite = true;
  cfg.kappa_at_least = k;
  std::map<int, cbg::SearchRecord> rows;
  std::map<int, std::set<std::string>> witnesses;
  cbg::filter_stream(*in, cfg, [&](const std::string&, const cbg::Graph& g) {
    auto& row = rows[g.order()];
    row.n = g.order();
    row.k = k;
    row.exhaustive = false;
    ++row.stats.examined;
    ++row.stats.passed;
    if (!row.m_min || g.size() < *row.m_min) {
      row.m_min = g.size();
      witnesses[g.order()].clear();
    }
    if (g.size() == *row.m_min)
      witnesses[g.order()].insert(g.order() <= 14 ? cbg::canonical_form(g) : cbg::to_graph6(g));
  });
  for (auto& [n, row] : rows) {
    row.witnesses.assign(witnesses[n].begin(), witnesses[n].end());
    json j = cbg::json_of_conjecture_row(row);
    j["mode"] = "sampled";
    emit(opts, j,
         "n=" + std::to_string(n) + "  m_min<=" +
             (row.m_min ? std::to_string(*row.m_min) : std::string("none")) + "  mode=sampled");
  }
  return 0;
}

int run_conjecture(const CommonOpts& opts, int k, int n_min, int n_max) {
  print_header(opts, "conjecture", json{{"k", k}, {"n_min", n_min}, {"n_max", n_max}});
  try {
    const auto rows =
        with_heartbeat([&] { return cbg::conjecture_table(k, n_min, n_max, opts.jobs, deadline_of(opts)); });
    bool truncated = false;
    double max_intercept = 0;
    bool have_intercept = false;
    for (const auto& r : rows) {
      truncated = truncated || r.truncated;
      json j = cbg::json_of_conjecture_row(r);
      j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
      if (r.m_min) {
        const double ic = (1.0 + k) * r.n / 2.0 - *r.m_min;
        if (!have_intercept || ic > max_intercept) max_intercept = ic;
        have_intercept = true;
      }
      emit(opts, j,
           "n=" + std::to_string(r.n) + "  m_min=" +
               (r.m_min ? std::to_string(*r.m_min) : std::string("none")) +
               "  mode=" + (r.exhaustive ? "exhaustive" : "sampled"));
    }
    if (!opts.as_json && have_intercept)
      std::cout << "max empirical intercept: " << max_intercept << "\n";
    return truncated ? 2 : 0;
  } catch (const std::exception& ex) {
    emit(opts, error_record("conjecture", ex.what()), std::string("error: ") + ex.what());
    return 1;
  }
}

int run_filter(const cbg::FilterConfig& cfg) {
  const auto stats = cbg::filter_stream(
      std::cin, cfg, [&](const std::string&, const cbg::Graph& g) { std::cout << cbg::to_graph6(g) << "\n"; });
  // Stats go to stderr so the stdout stream stays pure graph6 for pipes.
  std::fprintf(stderr, "%s\n", cbg::json_of(stats).dump().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for 2-connected chordal bipartite graphs"};
  app.require_subcommand(1);

  CommonOpts opts;

  std::vector<std::string> inputs;
  auto* recognize = app.add_subcommand("recognize", "chordal bipartite recognition with witnesses");
  recognize->add_option("graphs", inputs, "graph6 strings (default: stdin)");
  add_common(recognize, opts);

  auto* kappa = app.add_subcommand("kappa", "vertex connectivity");
  kappa->add_option("graphs", inputs, "graph6 strings (default: stdin)");
  add_common(kappa, opts);

  auto* bisimp = app.add_subcommand("bisimplicial", "list bisimplicial edges");
  bisimp->add_option("graphs", inputs, "graph6 strings (default: stdin)");
  add_common(bisimp, opts);

  std::string one_graph;
  int eu = 0, ev = 0;
  auto* eliminate = app.add_subcommand("eliminate", "eliminate an edge (drop both endpoints)");
  eliminate->add_option("graph", one_graph, "graph6")->required();
  eliminate->add_option("u", eu, "first endpoint")->required();
  eliminate->add_option("v", ev, "second endpoint")->required();
  add_common(eliminate, opts);

  std::string mode = "greedy";
  auto* peeo = app.add_subcommand("peeo", "perfect edge elimination order");
  peeo->add_option("graph", one_graph, "graph6")->required();
  peeo->add_option("--mode", mode, "greedy | backtracking")
      ->check(CLI::IsMember({"greedy", "backtracking"}));
  add_common(peeo, opts);

  std::string family;
  std::vector<int> fparams;
  auto* construct = app.add_subcommand("construct", "build a named graph family member");
  construct->add_option("family", family,
                        "path | cycle | complete-bipartite | grid | extremal-even | "
                        "extremal-odd | figure4 | random-chordal-bipartite")
      ->required();
  construct->add_option("params", fparams, "family parameters");
  add_common(construct, opts);

  std::string checker;
  int cut_budget = 3;
  auto* verify = app.add_subcommand("verify", "machine-check a lemma or the theorem bound");
  verify->add_option("checker", checker, "theorem | lemma1 | lemma3 | lemma5 | lemma6 | claims")
      ->required();
  verify->add_option("graphs", inputs, "graph6 strings (default: stdin)");
  verify->add_option("--cut-budget", cut_budget, "subset/cut size budget for sweeps");
  add_common(verify, opts);

  int sn = 0, sk = 2;
  auto* search = app.add_subcommand("search", "exhaustive minimum-size search");
  search->add_option("n", sn, "order")->required();
  search->add_option("k", sk, "required connectivity")->required();
  add_common(search, opts);

  int ck = 3, cn_min = 6, cn_max = 10;
  std::string cstream;
  auto* conjecture = app.add_subcommand("conjecture", "minimum-size table for higher connectivity");
  conjecture->add_option("k", ck, "connectivity")->required();
  conjecture->add_option("--n-min", cn_min, "first order (exhaustive mode)");
  conjecture->add_option("--n-max", cn_max, "last order (exhaustive mode)");
  conjecture->add_option("--stream", cstream, "graph6 corpus for sampled rows ('-' = stdin)");
  add_common(conjecture, opts);

  cbg::FilterConfig fcfg;
  auto* filter = app.add_subcommand("filter", "filter a graph6 stream (stdin to stdout)");
  filter->add_flag("--bipartite", fcfg.bipartite, "keep bipartite graphs");
  filter->add_flag("--chordal-bipartite", fcfg.chordal_bipartite, "keep chordal bipartite graphs");
  filter->add_option("--kappa-at-least", fcfg.kappa_at_least, "minimum connectivity");
  filter->add_option("--min-degree", fcfg.min_degree, "minimum degree");
  int edges_at_most = -1, edges_exactly = -1;
  filter->add_option("--edges-at-most", edges_at_most, "maximum size");
  filter->add_option("--edges-exactly", edges_exactly, "exact size");
  add_common(filter, opts);

  CLI11_PARSE(app, argc, argv);

  if (recognize->parsed()) return run_recognize(opts, inputs);
  if (kappa->parsed()) return run_kappa(opts, inputs);
  if (bisimp->parsed()) return run_bisimplicial(opts, inputs);
  if (eliminate->parsed()) return run_eliminate(opts, one_graph, eu, ev);
  if (peeo->parsed()) return run_peeo(opts, one_graph, mode);
  if (construct->parsed()) return run_construct(opts, family, fparams);
  if (verify->parsed()) return run_verify(opts, checker, inputs, cut_budget);
  if (search->parsed()) return run_search(opts, sn, sk);
  if (conjecture->parsed()) {
    if (!cstream.empty()) return run_conjecture_stream(opts, ck, cstream);
    return run_conjecture(opts, ck, cn_min, cn_max);
  }
  if (filter->parsed()) {
    if (edges_at_most >= 0) fcfg.edges_at_most = edges_at_most;
    if (edges_exactly >= 0) fcfg.edges_exactly = edges_exactly;
    return run_filter(fcfg);
  }
  return 1;
}
