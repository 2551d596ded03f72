#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ordtile/tiling.hpp"

using namespace ordtile;

TEST_CASE("perfect tiling basics") {
    auto answer = perfect_tiling(fixtures::k4(), fixtures::edge2());
    REQUIRE(answer.status == TilingStatus::PerfectFound);
    REQUIRE(answer.witness);
    CHECK(verify_tiling(fixtures::k4(), fixtures::edge2(), *answer.witness, true));

    // Divisibility shortcut.
    CHECK(perfect_tiling(fixtures::spaced_path5(), fixtures::edge2()).status ==
          TilingStatus::NoPerfect);

    // Spanning copy of the 5-vertex spaced path in the (2,2,1) realisation.
    auto host = fixtures::complete_multipartite_graph({2, 2, 1});
    auto spanning = perfect_tiling(host, fixtures::spaced_path5());
    REQUIRE(spanning.status == TilingStatus::PerfectFound);
    CHECK(verify_tiling(host, fixtures::spaced_path5(), *spanning.witness, true));
}

TEST_CASE("budget exhaustion is reported as timeout") {
    auto big = to_ordered_graph(OrderedMultipartite{{8, 8, 8}});
    auto answer = perfect_tiling(big, fixtures::k3(), /*budget=*/3);
    CHECK(answer.status == TilingStatus::Timeout);
    CHECK(answer.nodes > 3);
}

TEST_CASE("max tiling basics") {
    auto host = fixtures::complete_multipartite_graph({3, 1});
    auto answer = max_tiling(host, fixtures::edge2());
    CHECK(answer.status == TilingStatus::MaxCover);
    CHECK(answer.max_copies == 1);

    auto k5 = complete_graph(5);
    auto target = max_tiling(k5, fixtures::edge2(), 2);
    CHECK(target.target_met);
    REQUIRE(target.witness);
    CHECK(target.witness->copies.size() >= 2);
    CHECK(verify_tiling(k5, fixtures::edge2(), *target.witness, false));

    CHECK_THROWS_AS(max_tiling(k5, fixtures::edge2(), 3), std::invalid_argument);
}

TEST_CASE("h-cover on the named graphs") {
    CHECK(h_cover_uncovered(fixtures::k4(), fixtures::edge2()).empty());

    // All vertices uncovered when the pattern needs more interval classes
    // than the host has parts.
    auto bipartite = fixtures::complete_multipartite_graph({4, 4});
    auto uncovered = h_cover_uncovered(bipartite, fixtures::k3());
    CHECK(static_cast<int>(uncovered.size()) == 8);
}

TEST_CASE("verify_tiling rejects bad witnesses") {
    auto k4 = fixtures::k4();
    auto edge = fixtures::edge2();
    CHECK(verify_tiling(k4, edge, TilingWitness{{{1, 2}, {3, 4}}}, true));
    CHECK(!verify_tiling(k4, edge, TilingWitness{{{1, 2}, {2, 3}}}, false));  // overlap
    CHECK(!verify_tiling(k4, edge, TilingWitness{{{1, 2}}}, true));           // not perfect
    CHECK(!verify_tiling(k4, edge, TilingWitness{{{2, 1}}}, false));          // not increasing
    CHECK(!verify_tiling(k4, edge, TilingWitness{{{1, 2, 3}}}, false));       // wrong size
    auto path = fixtures::spaced_path7();
    CHECK(verify_tiling(path, path, TilingWitness{{{1, 2, 3, 4, 5, 6, 7}}}, true));
    // Pattern edge 1-3 missing between host vertices 2 and 4.
    CHECK(!verify_tiling(path, fixtures::spaced_path5(), TilingWitness{{{2, 3, 4, 5, 6}}},
                         false));
}

TEST_CASE("search agrees with the copy-list oracle on random instances") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int hp = 2 + static_cast<int>(rng() % 3);            // patterns up to 4 vertices
        int hg = hp * (1 + static_cast<int>(rng() % 2));     // hosts up to 8, divisible
        std::vector<std::pair<int, int>> ge, pe;
        for (int u = 1; u <= hg; ++u)
            for (int v = u + 1; v <= hg; ++v)
                if (rng() % 2) ge.emplace_back(u, v);
        for (int u = 1; u <= hp; ++u)
            for (int v = u + 1; v <= hp; ++v)
                if (rng() % 2) pe.emplace_back(u, v);
        OrderedGraph host(hg, ge), pattern(hp, pe);

        auto answer = perfect_tiling(host, pattern);
        REQUIRE(answer.status != TilingStatus::Timeout);
        bool expect = oracles::perfect_tiling_exists(host, pattern);
        CHECK((answer.status == TilingStatus::PerfectFound) == expect);
        if (answer.witness) CHECK(verify_tiling(host, pattern, *answer.witness, true));

        auto max = max_tiling(host, pattern);
        CHECK(max.max_copies == oracles::max_tiling_size(host, pattern));
        if (max.witness) CHECK(verify_tiling(host, pattern, *max.witness, false));
    }
}

TEST_CASE("identical runs give identical node counts") {
    auto host = fixtures::complete_multipartite_graph({6, 6, 6, 2});
    auto first = perfect_tiling(host, fixtures::c212());
    auto second = perfect_tiling(host, fixtures::c212());
    CHECK(first.status == second.status);
    CHECK(first.nodes == second.nodes);
}
