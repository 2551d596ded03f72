#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtile/chi_star.hpp"
#include "ordtile/ordered_graph.hpp"
#include "ordtile/rational.hpp"
#include "ordtile/structure.hpp"

namespace ordtile {

enum class PerfectCase { CaseI, CaseII, CaseIII, BipartiteOutOfScope, UnresolvedChiStar };
std::string to_string(PerfectCase c);

// A coefficient known exactly (lower == upper) or as an interval.
struct CoeffRange {
    Rational lower;
    Rational upper;
    bool exact() const { return lower == upper; }
};

struct ThresholdReport {
    int chi_lt = 0;
    ChiStarResult chi_star;
    std::optional<BarrierWitness> barrier;
    bool flexible = false;
    std::vector<int> fixed_prefix;
    PerfectCase perfect_case = PerfectCase::UnresolvedChiStar;
    std::optional<CoeffRange> perfect_coeff;
    Rational cover_coeff;
    std::optional<Rational> almost_perfect_coeff;
};

// Case split for patterns with chi_< >= 3: chi* >= chi_< is the almost-
// perfect regime; below it a local barrier forces the cover threshold;
// otherwise the almost-perfect coefficient still governs. chi_< == 2 is
// reported with cover and almost-perfect coefficients only.
ThresholdReport classify(const OrderedGraph& pattern, const ChiStarResult& chi_star);

}  // namespace ordtile
