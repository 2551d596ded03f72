#include <doctest.h>

#include "fixtures.hpp"
#include "ordtile/thresholds.hpp"

using namespace ordtile;

namespace {

ThresholdReport report_for(const OrderedGraph& g) { return classify(g, chi_star_exact(g)); }

}  // namespace

TEST_CASE("case I: complete 3-partite (2,1,2)") {
    auto report = report_for(fixtures::c212());
    CHECK(report.chi_lt == 3);
    CHECK(report.perfect_case == PerfectCase::CaseI);
    REQUIRE(report.perfect_coeff);
    CHECK(report.perfect_coeff->exact());
    CHECK(report.perfect_coeff->lower == Rational(11, 15));
    REQUIRE(report.almost_perfect_coeff);
    CHECK(*report.almost_perfect_coeff == Rational(11, 15));
}

TEST_CASE("case II: the 8-vertex chord path") {
    auto report = report_for(fixtures::chord_path8());
    CHECK(report.chi_lt == 3);
    REQUIRE(report.barrier);
    CHECK(report.perfect_case == PerfectCase::CaseII);
    REQUIRE(report.perfect_coeff);
    CHECK(report.perfect_coeff->lower == Rational(2, 3));
    CHECK(report.cover_coeff == Rational(2, 3));
    REQUIRE(report.almost_perfect_coeff);
    CHECK(*report.almost_perfect_coeff == Rational(5, 8));  // 1 - 3/8
}

TEST_CASE("case III: the 5-vertex spaced path") {
    auto report = report_for(fixtures::spaced_path5());
    CHECK(report.chi_lt == 3);
    CHECK(!report.barrier);
    CHECK(report.flexible);
    CHECK(report.perfect_case == PerfectCase::CaseIII);
    REQUIRE(report.perfect_coeff);
    CHECK(report.perfect_coeff->lower == Rational(3, 5));
    CHECK(report.cover_coeff == Rational(1, 2));
    REQUIRE(report.almost_perfect_coeff);
    CHECK(*report.almost_perfect_coeff == Rational(3, 5));
}

TEST_CASE("interval-bipartite patterns are delegated") {
    auto report = report_for(fixtures::edge2());
    CHECK(report.chi_lt == 2);
    CHECK(report.perfect_case == PerfectCase::BipartiteOutOfScope);
    CHECK(!report.perfect_coeff);
    CHECK(report.cover_coeff == Rational(0));  // no barrier: 1 - 1/(2-1)
    REQUIRE(report.almost_perfect_coeff);
    CHECK(*report.almost_perfect_coeff == Rational(1, 2));

    auto k22 = report_for(fixtures::k22_interval());
    CHECK(k22.perfect_case == PerfectCase::BipartiteOutOfScope);
    CHECK(k22.cover_coeff == Rational(1, 2));  // barrier present: 1 - 1/2
}

TEST_CASE("edgeless patterns are rejected") {
    OrderedGraph empty(4, {});
    CHECK_THROWS_AS(classify(empty, chi_star_exact(empty)), std::invalid_argument);
}

TEST_CASE("interval chi* straddling the chromatic number is surfaced") {
    OrderedGraph g = fixtures::spaced_path5();
    ChiStarResult fake;
    fake.exact = false;
    fake.lower = Rational(5, 2);
    fake.upper = Rational(5);
    auto report = classify(g, fake);
    CHECK(report.perfect_case == PerfectCase::UnresolvedChiStar);
    // No barrier here, so the coefficient interval is still meaningful.
    REQUIRE(report.perfect_coeff);
    CHECK(report.perfect_coeff->lower == Rational(3, 5));
    CHECK(report.perfect_coeff->upper == Rational(4, 5));
    CHECK(!report.almost_perfect_coeff);

    ChiStarResult high;
    high.exact = false;
    high.lower = Rational(4);
    high.upper = Rational(5);
    auto case1 = classify(g, high);
    CHECK(case1.perfect_case == PerfectCase::CaseI);
    REQUIRE(case1.perfect_coeff);
    CHECK(case1.perfect_coeff->lower == Rational(3, 4));
    CHECK(case1.perfect_coeff->upper == Rational(4, 5));
}

TEST_CASE("coefficient sanity across the named patterns") {
    for (const OrderedGraph& g :
         {fixtures::c212(), fixtures::chord_path8(), fixtures::spaced_path5(),
          fixtures::spaced_path7(), fixtures::k4(), fixtures::c112(), fixtures::c122()}) {
        auto report = report_for(g);
        CHECK(report.cover_coeff >= Rational(0));
        CHECK(report.cover_coeff < Rational(1));
        if (report.perfect_coeff) {
            CHECK(report.perfect_coeff->lower <= report.perfect_coeff->upper);
            CHECK(report.perfect_coeff->upper < Rational(1));
            // Covers are weaker than perfect tilings.
            CHECK(report.cover_coeff <= report.perfect_coeff->lower);
        }
        if (report.almost_perfect_coeff) {
            CHECK(*report.almost_perfect_coeff >= Rational(0));
            CHECK(*report.almost_perfect_coeff < Rational(1));
        }
        // Case/structure consistency.
        if (report.perfect_case == PerfectCase::CaseII) CHECK(report.barrier.has_value());
        if (report.perfect_case == PerfectCase::CaseIII) CHECK(report.flexible);
    }
}
