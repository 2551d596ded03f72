#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ordtile/colouring.hpp"
#include "ordtile/copies.hpp"

using namespace ordtile;

TEST_CASE("ordered graph validation") {
    CHECK_THROWS_AS(OrderedGraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(64, {}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{2, 2}}), std::invalid_argument);
    OrderedGraph g(3, {{2, 1}, {1, 2}});  // normalised and deduplicated
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
}

TEST_CASE("graph text format") {
    OrderedGraph g = fixtures::spaced_path7();
    std::string text = format_ordered_graph(g);
    CHECK(text == "7\n1 3\n3 5\n5 7\n");
    CHECK(parse_ordered_graph(text) == g);
    CHECK(parse_ordered_graph("# leading comment\n 5 \n1 3 # chord\n3 5\n") ==
          fixtures::spaced_path5());
    CHECK_THROWS_AS(parse_ordered_graph(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordered_graph("3\n2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordered_graph("3\n1 2\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordered_graph("3\n1 2 3\n"), std::invalid_argument);
}

TEST_CASE("format round trip on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int h = 1 + static_cast<int>(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= h; ++u)
            for (int v = u + 1; v <= h; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        OrderedGraph g(h, edges);
        std::string text = format_ordered_graph(g);
        CHECK(parse_ordered_graph(text) == g);
        CHECK(format_ordered_graph(parse_ordered_graph(text)) == text);
    }
}

TEST_CASE("interval chromatic number on the named graphs") {
    CHECK(interval_chromatic(OrderedGraph(5, {})) == 1);
    CHECK(interval_chromatic(fixtures::long_chords()) == 4);
    CHECK(interval_chromatic(fixtures::spaced_path7()) == 4);
    CHECK(interval_chromatic(fixtures::spaced_path5()) == 3);
    CHECK(interval_chromatic(fixtures::chord_path8()) == 3);
    CHECK(interval_chromatic(fixtures::k22_interval()) == 2);
    CHECK(interval_chromatic(fixtures::k4()) == 4);
    IntervalColouring witness;
    int r = interval_chromatic(fixtures::long_chords(), witness);
    CHECK(r == 4);
    CHECK(witness.classes() == 4);
    CHECK(witness.is_proper(fixtures::long_chords()));
}

TEST_CASE("greedy equals brute force for h <= 5") {
    for (int h = 1; h <= 5; ++h)
        fixtures::for_each_graph(h, [&](const OrderedGraph& g) {
            CHECK(interval_chromatic(g) == oracles::interval_chromatic(g));
        });
}

TEST_CASE("adding an edge never decreases the interval chromatic number") {
    fixtures::for_each_graph(5, [&](const OrderedGraph& g) {
        int base = interval_chromatic(g);
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v) {
                if (g.has_edge(u, v)) continue;
                auto edges = g.edges();
                edges.emplace_back(u, v);
                CHECK(interval_chromatic(OrderedGraph(5, edges)) >= base);
            }
    });
}

TEST_CASE("colouring enumeration") {
    auto single = enumerate_interval_colourings(fixtures::edge2(), 2, false);
    REQUIRE(single.size() == 1);
    CHECK(single[0].lengths == std::vector<int>{1, 1});

    auto both = enumerate_interval_colourings(OrderedGraph(3, {}), 2, false);
    REQUIRE(both.size() == 2);
    CHECK(both[0].lengths == std::vector<int>{1, 2});
    CHECK(both[1].lengths == std::vector<int>{2, 1});

    // Count against the brute-force composition filter.
    OrderedGraph fig2 = fixtures::spaced_path7();
    auto list = enumerate_interval_colourings(fig2, 4, false);
    CHECK(static_cast<int>(list.size()) == oracles::count_proper_colourings(fig2, 4, false));
    for (const auto& col : list) CHECK(col.is_proper(fig2));

    // Below the chromatic number nothing is proper; at it something is.
    CHECK(enumerate_interval_colourings(fig2, 3, false).empty());
    CHECK(!list.empty());
}

TEST_CASE("colouring enumeration with empty classes") {
    auto with_empty = enumerate_interval_colourings(fixtures::edge2(), 3, true);
    auto expected = oracles::count_proper_colourings(fixtures::edge2(), 3, true);
    CHECK(static_cast<int>(with_empty.size()) == expected);
}

TEST_CASE("copy enumeration on the named graphs") {
    CHECK(count_copies(fixtures::k4(), fixtures::edge2()) == 6);
    CHECK(count_copies(fixtures::spaced_path7(), fixtures::edge2()) == 3);
    CHECK(enumerate_copies(fixtures::k4(), fixtures::edge2()).size() == 6);
}

TEST_CASE("copies agree with the combination oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int hg = 4 + static_cast<int>(rng() % 5);  // hosts up to 8 vertices
        int hp = 2 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> ge, pe;
        for (int u = 1; u <= hg; ++u)
            for (int v = u + 1; v <= hg; ++v)
                if (rng() % 2) ge.emplace_back(u, v);
        for (int u = 1; u <= hp; ++u)
            for (int v = u + 1; v <= hp; ++v)
                if (rng() % 2) pe.emplace_back(u, v);
        OrderedGraph host(hg, ge), pattern(hp, pe);
        auto got = enumerate_copies(host, pattern);
        auto want = oracles::copies(host, pattern);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].images == want[k]);
    }
}

TEST_CASE("anchored copy enumeration") {
    // Host: singleton class {1} adjacent to class {2..5} only, classes
    // {2..5} and {6..9} complete bipartite between them.
    auto f1 = OrderedGraph(9, [] {
        std::vector<std::pair<int, int>> edges;
        for (int v = 2; v <= 5; ++v) edges.emplace_back(1, v);
        for (int u = 2; u <= 5; ++u)
            for (int v = 6; v <= 9; ++v) edges.emplace_back(u, v);
        return edges;
    }());
    CHECK(count_copies(f1, fixtures::k22_interval(), 1) == 0);
    CHECK(count_copies(f1, fixtures::k22_interval()) > 0);
    // Every returned embedding passes an independent check and contains the anchor.
    auto anchored = enumerate_copies(f1, fixtures::k22_interval(), 7);
    auto all = oracles::copies(f1, fixtures::k22_interval());
    std::size_t expected = 0;
    for (const auto& copy : all) {
        bool has = false;
        for (int v : copy) has |= (v == 7);
        expected += has;
    }
    CHECK(anchored.size() == expected);
}

TEST_CASE("copy enumeration supports early termination") {
    int seen = 0;
    CopyEnumOptions opts;
    bool completed = for_each_copy(fixtures::k4(), fixtures::edge2(), opts,
                                   [&](const Embedding&) { return ++seen < 2; });
    CHECK(!completed);
    CHECK(seen == 2);
}
