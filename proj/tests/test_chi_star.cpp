#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ordtile/chi_star.hpp"
#include "ordtile/multipartite.hpp"

using namespace ordtile;

TEST_CASE("colouring statistics on the named graphs") {
    auto edge = colouring_statistics(fixtures::edge2());
    CHECK(edge.ell_minus == 1);
    CHECK(edge.ell_minus_star == 1);
    CHECK(edge.ell_plus == 1);
    CHECK(edge.alpha == 1);

    auto k22 = colouring_statistics(fixtures::k22_interval());
    CHECK(k22.alpha_plus == 2);
    CHECK(k22.alpha_minus == 2);
    CHECK(k22.alpha == 2);
    CHECK(k22.ell_minus == 2);
    CHECK(k22.ell_minus_star == 2);
    CHECK(k22.ell_plus == 2);

    auto fig2 = colouring_statistics(fixtures::spaced_path7());
    CHECK(fig2.r == 4);
    CHECK(fig2.ell_minus == 2);
    CHECK(fig2.ell_minus_star == 2);
    CHECK(fig2.ell_plus == 1);

    auto ex2 = colouring_statistics(fixtures::chord_path8());
    CHECK(ex2.ell_minus == 4);
    CHECK(ex2.ell_minus_star == 3);
    CHECK(ex2.ell_plus == 2);
}

TEST_CASE("first and last class maxima equal the independent prefix and suffix") {
    // The greedy argument makes l- = alpha+ and l-* = alpha-; check exhaustively.
    for (int h = 2; h <= 5; ++h)
        fixtures::for_each_graph(h, [&](const OrderedGraph& g) {
            auto stats = colouring_statistics(g);
            CHECK(stats.ell_minus == stats.alpha_plus);
            CHECK(stats.ell_minus_star == stats.alpha_minus);
        });
}

TEST_CASE("bounds on the named graphs") {
    auto fig2 = chi_star_bounds(fixtures::spaced_path7());
    CHECK(fig2.lower == Rational(7, 2));
    CHECK(fig2.upper == Rational(7));

    auto k4 = chi_star_bounds(fixtures::k4());
    CHECK(k4.lower == Rational(4));
    CHECK(k4.upper == Rational(4));

    auto c212 = chi_star_bounds(fixtures::c212());
    CHECK(c212.lower == Rational(5, 2));
    CHECK(c212.upper == Rational(5));
}

TEST_CASE("exact values by rule") {
    auto k22 = chi_star_exact(fixtures::k22_interval());
    REQUIRE(k22.exact);
    CHECK(k22.value == Rational(2));
    CHECK(k22.rule == "bipartite-alpha");

    auto c122 = chi_star_exact(fixtures::c122());
    REQUIRE(c122.exact);
    CHECK(c122.value == Rational(5));
    CHECK(c122.rule == "complete-multipartite-first");

    auto c221 = chi_star_exact(fixtures::complete_multipartite_graph({2, 2, 1}));
    REQUIRE(c221.exact);
    CHECK(c221.value == Rational(5));
    CHECK(c221.rule == "complete-multipartite-last");

    auto c212 = chi_star_exact(fixtures::c212());
    REQUIRE(c212.exact);
    CHECK(c212.value == Rational(15, 4));
    CHECK(c212.rule == "three-partite");

    auto kr = chi_star_exact(fixtures::k4());
    REQUIRE(kr.exact);
    CHECK(kr.value == Rational(4));
    CHECK(kr.rule == "bounds-coincide");

    auto path5 = chi_star_exact(fixtures::spaced_path5());
    REQUIRE(path5.exact);
    CHECK(path5.value == Rational(5, 2));
    CHECK(path5.rule == "bottlegraph-scan");
    REQUIRE(path5.bottlegraph);
    CHECK(*path5.bottlegraph == std::vector<int>{2, 2, 1});

    auto fig2 = chi_star_exact(fixtures::spaced_path7());
    REQUIRE(fig2.exact);
    CHECK(fig2.value == Rational(7, 2));
    CHECK(fig2.rule == "bottlegraph-scan");

    auto ex2 = chi_star_exact(fixtures::chord_path8());
    REQUIRE(ex2.exact);
    CHECK(ex2.value == Rational(8, 3));
}

TEST_CASE("three-partite formula") {
    CHECK(three_partite_formula(2, 1, 2) == Rational(15, 4));
    CHECK(three_partite_formula(1, 1, 1) == Rational(3));
    CHECK(three_partite_formula(1, 2, 2) == Rational(5));
    // ell = 2 instance of the family (l, 1, l): (4l^2 - 1) / l^2.
    CHECK(three_partite_formula(3, 1, 3) == Rational(35, 9));
}

TEST_CASE("formula coherence for complete 3-partite shapes") {
    // Where the smallest part sits first or last, the twopartite rule and the
    // 3-partite closed form must agree.
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                int h = a + b + c;
                Rational g = three_partite_formula(a, b, c);
                int smallest = std::min({a, b, c});
                if (a == smallest) CHECK(g == Rational(h, a));
                if (c == smallest) CHECK(g == Rational(h, c));
                OrderedGraph graph = fixtures::complete_multipartite_graph({a, b, c});
                ChiStarResult result = chi_star_exact(graph);
                REQUIRE(result.exact);
                CHECK(result.value == g);
                CHECK(result.value >= result.lower);
                CHECK(result.value <= result.upper);
                CHECK(Rational(2) < result.value);  // strictly above chi_< - 1
            }
}

TEST_CASE("complete multipartite detection") {
    CHECK(*as_complete_multipartite(fixtures::c212()) == std::vector<int>{2, 1, 2});
    CHECK(*as_complete_multipartite(fixtures::k4()) == std::vector<int>{1, 1, 1, 1});
    CHECK(*as_complete_multipartite(OrderedGraph(3, {})) == std::vector<int>{3});
    CHECK(!as_complete_multipartite(fixtures::spaced_path5()).has_value());
    CHECK(!as_complete_multipartite(OrderedGraph(4, {{1, 3}, {1, 4}, {2, 3}})).has_value());
}

TEST_CASE("bipartite rule cross-checked by search where the bottle is simple") {
    // For alpha >= h/2 the two-part bottle (alpha, h - alpha) tiles simply;
    // its critical chromatic number h/alpha then certifies the formula.
    int checked = 0;
    for (int h = 2; h <= 5; ++h)
        fixtures::for_each_graph(h, [&](const OrderedGraph& g) {
            if (oracles::interval_chromatic(g) != 2) return;
            auto stats = colouring_statistics(g);
            if (2 * stats.alpha < h) return;
            std::vector<int> sizes{stats.alpha, h - stats.alpha};
            auto verdict = check_simple_bottlegraph(CompleteMultipartite(sizes), g);
            CHECK(verdict.status == BottleStatus::SimpleYes);
            CHECK(crit_chrom(CompleteMultipartite(sizes)) == Rational(h, stats.alpha));
            ++checked;
        });
    CHECK(checked > 0);
}

TEST_CASE("exact values always sit inside the bounds, exhaustively to h = 5") {
    for (int h = 2; h <= 5; ++h)
        fixtures::for_each_graph(h, [&](const OrderedGraph& g) {
            ChiStarResult result = chi_star_exact(g);
            CHECK(result.lower <= result.upper);
            if (result.exact) {
                CHECK(result.value >= result.lower);
                CHECK(result.value <= result.upper);
                int r = interval_chromatic(g);
                CHECK(Rational(r - 1) < result.value);
            }
        });
}
