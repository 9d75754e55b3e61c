#include <doctest.h>

#include <random>

#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"
#include "cbg/constructions.hpp"
#include "cbg/search.hpp"
#include "cbg/verify.hpp"
#include "test_util.hpp"

using namespace cbg;

TEST_SUITE_BEGIN("verify");

TEST_CASE("theorem_bound values") {
  const int expected[] = {4, 6, 7, 9, 10, 12};
  for (int n = 4; n <= 9; ++n) CHECK(theorem_bound(n) == expected[n - 4]);
  CHECK(theorem_bound(20) == 28);
  CHECK(theorem_bound(19) == 27);
  CHECK_THROWS_AS(theorem_bound(3), std::invalid_argument);
}

TEST_CASE("check_theorem") {
  SUBCASE("tight even construction satisfies with equality") {
    const BoundVerdict v = check_theorem(extremal_even(12).graph);
    CHECK(v.satisfied);
    CHECK(!v.vacuous);
    CHECK(v.m == v.bound);
    CHECK(v.bound == 16);
  }
  SUBCASE("C8 is vacuous: not chordal bipartite") {
    const BoundVerdict v = check_theorem(cycle(8));
    CHECK(v.vacuous);
    CHECK(v.satisfied);
  }
  SUBCASE("K23 meets the bound exactly") {
    const BoundVerdict v = check_theorem(complete_bipartite(2, 3));
    CHECK(v.satisfied);
    CHECK(v.m == 6);
    CHECK(v.bound == 6);
  }
  SUBCASE("trees are vacuous: connectivity below two") {
    CHECK(check_theorem(path(6)).vacuous);
  }
  SUBCASE("the satisfied formula itself flags a hypothetical violator") {
    const BoundVerdict v = detail::bound_verdict_from(10, 12, 2, true);
    CHECK(!v.vacuous);
    CHECK(!v.satisfied);
  }
}

TEST_CASE("check_lemma1") {
  CHECK(check_lemma1(complete_bipartite(2, 3), vbit(0)));
  CHECK(check_lemma1(cycle(6), 0));
  SUBCASE("holds for every small subset on a mixed corpus") {
    std::mt19937_64 rng(47);
    std::vector<Graph> corpus{cycle(6), complete_bipartite(3, 3), grid(2, 4),
                              figure4_graph().graph};
    for (int i = 0; i < 12; ++i) corpus.push_back(test::random_graph(5 + i % 4, 0.5, rng));
    for (const Graph& g : corpus)
      for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
        if (popcount(s) > 3 || s == g.vertex_mask()) continue;
        CHECK(check_lemma1(g, s));
      }
  }
  CHECK_THROWS_AS(check_lemma1(path(3), full_mask(3)), std::invalid_argument);
}

TEST_CASE("check_lemma3") {
  CHECK(check_lemma3(complete_bipartite(2, 3)));
  CHECK(check_lemma3(grid(2, 6)));
  CHECK(check_lemma3(figure4_graph().graph));
  SUBCASE("a graph containing a chordless 6-cycle fails upstream") {
    // C6 plus one isolated vertex is not chordal bipartite, so the
    // precondition itself rejects it.
    const Graph bad = Graph::from_edges(
        7, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK_THROWS_AS(check_lemma3(bad), std::invalid_argument);
  }
}

TEST_CASE("check_lemma5 on the connectivity-3 example") {
  const Graph g = figure4_graph().graph;
  const Edge e(1, 5);
  const Mask alive = g.vertex_mask() & ~vbit(1) & ~vbit(5);
  const auto cuts = all_vertex_cuts_up_to(g, alive, 3);
  CHECK(!cuts.empty());
  for (Mask s : cuts) {
    const Lemma5Report r = check_lemma5(g, e, s);
    CHECK(r.kappa == 3);
    CHECK(r.all_ok());
    CHECK(r.components.size() >= 2);
  }
  SUBCASE("the minimum cut activates the V=S branch") {
    const Lemma5Report r = check_lemma5(g, e, vbit(0) | vbit(4));
    CHECK(r.all_ok());
    CHECK(popcount(r.cut) == r.kappa - 1);
    CHECK(r.v_side == (vbit(0) | vbit(4)));
  }
}

TEST_CASE("check_lemma5 on K23 with the single cut vertex") {
  const Graph g = complete_bipartite(2, 3);
  const Edge e(0, 2);
  // After eliminating (0,2) the rest is a path through vertex 1.
  const Lemma5Report r = check_lemma5(g, e, vbit(1));
  CHECK(r.kappa == 2);
  CHECK(r.all_ok());
  CHECK(r.v_side == vbit(1));  // N(2)\{0}
  CHECK(popcount(r.cut) == r.kappa - 1);
}

TEST_CASE("check_lemma5 preconditions are individually coded") {
  CHECK_THROWS_AS(check_lemma5(cycle(6), Edge(0, 1), vbit(3)), std::invalid_argument);
  // C4 minus an edge's endpoints is K2: no vertex cut exists at all.
  CHECK_THROWS_AS(check_lemma5(cycle(4), Edge(0, 1), vbit(2)), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma5(complete_bipartite(2, 3), Edge(0, 2), vbit(0)),
                  std::invalid_argument);
}

TEST_CASE("lemma5 item evaluation flags a broken U-V join") {
  // Remove one U-V edge of the example graph and bypass the precondition
  // re-derivation: item (2) must fail with a witness pair.
  const Graph broken = figure4_graph().graph.without_edge(Edge(0, 6));
  const Lemma5Report r = detail::lemma5_items(broken, Edge(1, 5), vbit(0) | vbit(4), 3);
  CHECK(!r.items[1].ok);
  CHECK(!r.items[1].witness.empty());
  CHECK(!r.all_ok());
}

TEST_CASE("check_lemma6") {
  CHECK(check_lemma6(complete_bipartite(2, 3)));
  CHECK(check_lemma6(figure4_graph().graph));
  CHECK(check_lemma6(path(2)));
  SUBCASE("corpus sweep") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
      const int n = 5 + i % 10;
      const int max_m = (n / 2) * (n - n / 2);
      const Graph g = random_chordal_bipartite(n, std::min(max_m, n - 1 + i % n), rng());
      CHECK(check_lemma6(g));
    }
  }
  SUBCASE("guard rejects non-chordal-bipartite input") {
    CHECK_THROWS_AS(check_lemma6(cycle(6)), std::invalid_argument);
  }
}

TEST_CASE("check_proof_claims") {
  SUBCASE("holds on the odd extremal family") {
    const auto r = check_proof_claims(extremal_odd(7).graph);
    CHECK(r.ok);
  }
  SUBCASE("K23 is a non-vacuous passing instance") {
    const auto r = check_proof_claims(complete_bipartite(2, 3));
    CHECK(r.ok);
    CHECK(!r.vacuous);
    CHECK(r.instances > 0);
  }
  SUBCASE("C4 is vacuously true: the eliminated graph has no cut vertex") {
    const auto r = check_proof_claims(cycle(4));
    CHECK(r.ok);
    CHECK(r.vacuous);
    CHECK(r.instances == 0);
  }
  SUBCASE("preconditions enforced") {
    CHECK_THROWS_AS(check_proof_claims(cycle(6)), std::invalid_argument);
    CHECK_THROWS_AS(check_proof_claims(figure4_graph().graph), std::invalid_argument);
  }
}

TEST_CASE("conjecture_lower") {
  CHECK(conjecture_lower(10, 3) == Rational{20, 1});
  CHECK(conjecture_lower(12, 4) == Rational{30, 1});
  CHECK(conjecture_lower(7, 3) == Rational{14, 1});
  CHECK(conjecture_lower(9, 4) == Rational{45, 2});
  CHECK_THROWS_AS(conjecture_lower(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_lower(4, 3), std::invalid_argument);
  SUBCASE("the example graph sits below the intercept-free line") {
    const NamedGraph fig4 = figure4_graph();
    const Rational lower = conjecture_lower(fig4.graph.order(), 3);
    CHECK(lower == Rational{20, 1});
    CHECK(fig4.graph.size() == 18);  // 18 < 20: consistent with an O(1) slack
  }
}

TEST_SUITE_END();
