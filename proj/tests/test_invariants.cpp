// Corpus-wide soundness sweep: every checker in the verify module runs over
// (i) each 2-connected chordal bipartite isomorphism class with n <= 8 and
// (ii) a thousand seeded random chordal bipartite graphs with n <= 16.

#include <doctest.h>

#include <random>

#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"
#include "cbg/constructions.hpp"
#include "cbg/search.hpp"
#include "cbg/verify.hpp"
#include "test_util.hpp"

using namespace cbg;

namespace {

const std::vector<Graph>& two_connected_classes() {
  static const std::vector<Graph> classes = [] {
    std::vector<Graph> out;
    for (int n = 4; n <= 8; ++n)
      for (const Graph& g : connected_bipartite_classes(n))
        if (is_chordal_bipartite(g) && vertex_connectivity_at_least(g, 2)) out.push_back(g);
    return out;
  }();
  return classes;
}

const std::vector<Graph>& random_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out;
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 1000; ++i) {
      const int n = 6 + static_cast<int>(rng() % 11);
      const int max_prod = (n / 2) * (n - n / 2);
      const int target =
          n + static_cast<int>(rng() % std::max(1, std::min(max_prod, 2 * n + 4) - n));
      out.push_back(random_chordal_bipartite(n, target, rng()));
    }
    return out;
  }();
  return corpus;
}

}  // namespace

TEST_SUITE_BEGIN("invariants");

TEST_CASE("theorem bound holds on both corpora") {
  for (const Graph& g : two_connected_classes()) {
    const BoundVerdict v = check_theorem(g);
    CHECK(v.satisfied);
    CHECK(!v.vacuous);
  }
  for (const Graph& g : random_corpus()) CHECK(check_theorem(g).satisfied);
}

TEST_CASE("heredity holds on both corpora") {
  for (const Graph& g : two_connected_classes()) CHECK(check_lemma3(g));
  for (const Graph& g : random_corpus()) CHECK(check_lemma3(g));
}

TEST_CASE("connectivity drop under vertex deletion is bounded") {
  // Exhaustive |S| <= 3 on the classes; |S| <= 2 plus a size-3 slice on the
  // larger random graphs to keep the sweep inside a few seconds.
  for (const Graph& g : two_connected_classes())
    for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
      if (popcount(s) > 3 || s == g.vertex_mask()) continue;
      CHECK(check_lemma1(g, s));
    }
  std::mt19937_64 rng(99);
  int index = 0;
  for (const Graph& g : random_corpus()) {
    for (int v = 0; v < g.order(); ++v)
      for (int w = v; w < g.order(); ++w) {
        const Mask s = vbit(v) | vbit(w);
        if (s == g.vertex_mask()) continue;
        CHECK(check_lemma1(g, s));
      }
    if (++index % 25 == 0) {
      for (int trial = 0; trial < 20; ++trial) {
        Mask s = 0;
        while (popcount(s) < 3) s |= vbit(static_cast<int>(rng() % g.order()));
        if (s == g.vertex_mask()) continue;
        CHECK(check_lemma1(g, s));
      }
    }
  }
}

TEST_CASE("elimination keeps connectivity within one") {
  for (const Graph& g : two_connected_classes()) CHECK(check_lemma6(g));
  for (const Graph& g : random_corpus()) CHECK(check_lemma6(g));
}

TEST_CASE("the five cut statements hold for every edge and small cut") {
  for (const Graph& g : two_connected_classes()) {
    const int kappa = vertex_connectivity(g);
    for (const Edge& e : bisimplicial_edges(g)) {
      const Mask alive = g.vertex_mask() & ~vbit(e.u) & ~vbit(e.v);
      for (Mask s : all_vertex_cuts_up_to(g, alive, kappa))
        CHECK(check_lemma5(g, e, s).all_ok());
    }
  }
}

TEST_CASE("proof-internal claims hold wherever their hypothesis fires") {
  int non_vacuous = 0;
  for (const Graph& g : two_connected_classes()) {
    if (vertex_connectivity(g) != 2) continue;
    const auto r = check_proof_claims(g);
    CHECK(r.ok);
    if (!r.vacuous) ++non_vacuous;
  }
  for (const Graph& g : random_corpus()) {
    if (vertex_connectivity(g) != 2) continue;
    const auto r = check_proof_claims(g);
    CHECK(r.ok);
    if (!r.vacuous) ++non_vacuous;
  }
  CHECK(non_vacuous > 0);
}

TEST_SUITE_END();
