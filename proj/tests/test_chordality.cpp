#include <doctest.h>

#include <random>

#include "cbg/chordality.hpp"
#include "cbg/connectivity.hpp"
#include "cbg/constructions.hpp"
#include "cbg/search.hpp"
#include "test_util.hpp"

using namespace cbg;

TEST_SUITE_BEGIN("chordality");

TEST_CASE("is_bisimplicial") {
  for (const Edge& e : cycle(4).edges()) CHECK(is_bisimplicial(cycle(4), e));
  for (const Edge& e : cycle(6).edges()) CHECK(!is_bisimplicial(cycle(6), e));
  CHECK(is_bisimplicial(figure4_graph().graph, Edge(1, 5)));
  CHECK_THROWS_AS(is_bisimplicial(cycle(4), Edge(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(is_bisimplicial(cycle(5), Edge(0, 1)), std::invalid_argument);
}

TEST_CASE("bisimplicial_edges") {
  CHECK(bisimplicial_edges(cycle(4)).size() == 4);
  CHECK(bisimplicial_edges(cycle(6)).empty());
  CHECK_THROWS_AS(bisimplicial_edges(cycle(5)), std::invalid_argument);
  SUBCASE("chordal bipartite graphs with an edge always have one") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
      const int n = 5 + i % 10;
      const int max_m = (n / 2) * (n - n / 2);
      const Graph g = random_chordal_bipartite(n, std::min(max_m, n - 1 + i % n), rng());
      REQUIRE(g.size() >= 1);
      CHECK(!bisimplicial_edges(g).empty());
    }
  }
}

TEST_CASE("find_chordless_cycle_ge6") {
  SUBCASE("C6 is its own witness") {
    const auto w = find_chordless_cycle_ge6(cycle(6));
    REQUIRE(w.has_value());
    CHECK(w->cycle.size() == 6);
    CHECK(test::valid_chordless_cycle(cycle(6), w->cycle));
  }
  SUBCASE("the 2xk grid has none") {
    CHECK(!find_chordless_cycle_ge6(grid(2, 5)));
    CHECK(oracle_is_chordal_bipartite(grid(2, 5)));
  }
  SUBCASE("the 3x3 grid boundary is a chordless 8-cycle") {
    const auto w = find_chordless_cycle_ge6(grid(3, 3));
    REQUIRE(w.has_value());
    CHECK(w->cycle.size() == 8);
    CHECK(test::valid_chordless_cycle(grid(3, 3), w->cycle));
    CHECK(!oracle_is_chordal_bipartite(grid(3, 3)));
  }
  SUBCASE("every witness satisfies its invariants") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
      const Graph g = test::random_graph(5 + i % 8, 0.35, rng);
      if (const auto w = find_chordless_cycle_ge6(g))
        CHECK(test::valid_chordless_cycle(g, w->cycle));
    }
  }
}

TEST_CASE("is_chordal_bipartite on named graphs") {
  CHECK(is_chordal_bipartite(cycle(4)));
  CHECK(is_chordal_bipartite(complete_bipartite(2, 3)));
  CHECK(is_chordal_bipartite(path(7)));
  CHECK(!is_chordal_bipartite(cycle(6)));
  CHECK(is_chordal_bipartite(figure4_graph().graph));
  SUBCASE("non-bipartite input reports a distinct reason instead of throwing") {
    const Recognition r = recognize_chordal_bipartite(cycle(5));
    CHECK(!r.chordal_bipartite());
    CHECK(r.verdict == ChordalityVerdict::NotBipartite);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() % 2 == 1);  // an odd cycle
  }
  SUBCASE("long-cycle verdict carries the cycle") {
    const Recognition r = recognize_chordal_bipartite(cycle(8));
    CHECK(r.verdict == ChordalityVerdict::LongChordlessCycle);
    REQUIRE(r.witness.has_value());
    CHECK(test::valid_chordless_cycle(cycle(8), *r.witness));
  }
}

TEST_CASE("recognizer agrees with the literal oracle") {
  CHECK(!oracle_is_chordal_bipartite(cycle(8)));
  CHECK(!is_chordal_bipartite(cycle(8)));
  CHECK(oracle_is_chordal_bipartite(extremal_odd(9).graph));
  CHECK(is_chordal_bipartite(extremal_odd(9).graph));
  CHECK_THROWS_AS(oracle_is_chordal_bipartite(path(13)), std::invalid_argument);
  SUBCASE("exhaustively on all connected bipartite classes up to order 7") {
    for (int n = 2; n <= 7; ++n)
      for (const Graph& g : connected_bipartite_classes(n))
        CHECK(is_chordal_bipartite(g) == oracle_is_chordal_bipartite(g));
  }
  SUBCASE("on random bipartite graphs") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 500; ++i) {
      const int n = 8 + i % 4;
      const Graph g = test::random_connected_bipartite(n, n + static_cast<int>(rng() % n), rng);
      CHECK(is_chordal_bipartite(g) == oracle_is_chordal_bipartite(g));
    }
  }
}

TEST_CASE("find_peeo greedy on C4") {
  const auto order = find_peeo(cycle(4), PeeoMode::Greedy);
  REQUIRE(order.has_value());
  REQUIRE(order->steps.size() == 2);
  CHECK(order->steps[0] == Edge(0, 1));
  CHECK(order->steps[1] == Edge(2, 3));
  CHECK(static_cast<bool>(verify_peeo(cycle(4), *order)));
}

TEST_CASE("C6 has no elimination order in either mode") {
  CHECK(!find_peeo(cycle(6), PeeoMode::Greedy));
  CHECK(!find_peeo(cycle(6), PeeoMode::Backtracking));
}

TEST_CASE("backtracking order on the 2x4 grid verifies") {
  const auto order = find_peeo(grid(2, 4), PeeoMode::Backtracking);
  REQUIRE(order.has_value());
  CHECK(static_cast<bool>(verify_peeo(grid(2, 4), *order)));
}

TEST_CASE("greedy and backtracking both succeed on chordal bipartite graphs") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    const int n = 5 + i % 9;
    const int max_m = (n / 2) * (n - n / 2);
    const Graph g = random_chordal_bipartite(n, std::min(max_m, n - 1 + i % n), rng());
    const auto greedy = find_peeo(g, PeeoMode::Greedy);
    const auto complete = find_peeo(g, PeeoMode::Backtracking);
    REQUIRE(greedy.has_value());
    REQUIRE(complete.has_value());
    CHECK(static_cast<bool>(verify_peeo(g, *greedy)));
    CHECK(static_cast<bool>(verify_peeo(g, *complete)));
  }
}

TEST_CASE("verify_peeo rejects corrupted orders") {
  SUBCASE("shared endpoint") {
    EliminationOrder bad;
    bad.steps = {Edge(0, 1), Edge(1, 2)};
    const PeeoCheck check = verify_peeo(cycle(4), bad);
    CHECK(!check.ok);
    CHECK(check.first_bad_step == 1);
    CHECK(check.reason == PeeoCheck::Reason::EndpointReused);
  }
  SUBCASE("swap that breaks step-wise bisimpliciality") {
    // Greedy on P6 eliminates (0,1),(2,3),(4,5); starting with (2,3) instead
    // is not bisimplicial in the full path since 1 and 4 are non-adjacent.
    const Graph p6 = path(6);
    const auto order = find_peeo(p6, PeeoMode::Greedy);
    REQUIRE(order.has_value());
    REQUIRE(order->steps.size() == 3);
    EliminationOrder swapped = *order;
    std::swap(swapped.steps[0], swapped.steps[1]);
    const PeeoCheck check = verify_peeo(p6, swapped);
    CHECK(!check.ok);
    CHECK(check.first_bad_step == 0);
    CHECK(check.reason == PeeoCheck::Reason::NotBisimplicial);
  }
  SUBCASE("leftover edges") {
    EliminationOrder incomplete;
    incomplete.steps = {Edge(0, 1)};
    const PeeoCheck check = verify_peeo(cycle(4), incomplete);
    CHECK(!check.ok);
    CHECK(check.reason == PeeoCheck::Reason::LeftoverEdges);
  }
}

TEST_CASE("random_chordal_bipartite") {
  SUBCASE("a tree target yields a tree") {
    const Graph g = random_chordal_bipartite(10, 9, 17);
    CHECK(g.size() == 9);
    CHECK(is_connected(g));
    CHECK(is_chordal_bipartite(g));
  }
  SUBCASE("every emitted graph is chordal bipartite and deterministic per seed") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Graph a = random_chordal_bipartite(12, 16, seed);
      const Graph b = random_chordal_bipartite(12, 16, seed);
      CHECK(to_graph6(a) == to_graph6(b));
      CHECK(is_chordal_bipartite(a));
      CHECK(test::well_formed(a));
    }
  }
  SUBCASE("bounds are enforced") {
    CHECK_THROWS_AS(random_chordal_bipartite(10, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_chordal_bipartite(10, 26, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_chordal_bipartite(3, 2, 1), std::invalid_argument);
  }
}

TEST_SUITE_END();
