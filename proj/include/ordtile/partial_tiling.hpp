#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtile/multipartite.hpp"
#include "ordtile/ordered_graph.hpp"
#include "ordtile/rational.hpp"

namespace ordtile {

// T = max over positions of the minimum class size, J = the maximum class
// size, both across all proper interval r-colourings; x0 = h/((r-1)J + T) is
// where the small-x linear regime provably ends.
struct TJX {
    int t_value = 0;
    int j_value = 0;
    Rational x0;
};

TJX tj_x0(const OrderedGraph& pattern);

// One affine piece of the minimum-degree coefficient f(x) = a + b*x.
struct FPiece {
    Rational x_from;  // exclusive
    Rational x_to;
    bool x_to_inclusive = true;
    Rational a;
    Rational b;
    std::string source;

    Rational value_at(const Rational& x) const { return a + b * x; }
};

// An x-range where only bounds on f are known.
struct FGap {
    Rational x_from;  // exclusive
    Rational x_to;    // exclusive
    Rational f_lower; // strict lower bound (monotonicity from the last piece)
    Rational f_upper;
    std::string source;
};

struct FProfile {
    int chi_lt = 0;
    std::vector<FPiece> pieces;  // ascending in x, non-overlapping
    std::vector<FGap> gaps;
};

// Piece assembly by rule priority: interval-bipartite patterns get one line
// through the origin; complete multipartite patterns with non-decreasing
// parts get the full piecewise-linear profile; anything else gets the
// small-x piece up to x0 and a bounds-only gap beyond.
FProfile f_profile(const OrderedGraph& pattern);

enum class XBottleStatus { Yes, No, Unknown };

struct XBottleVerdict {
    XBottleStatus status = XBottleStatus::Unknown;
    std::vector<OrderingWitness> witnesses;    // tilings meeting the target
    std::optional<OrderedMultipartite> failing_ordering;
    int target_copies = 0;
};

// Every distinct ordering must admit a tiling covering at least ceil(x*|B|)
// vertices. B must have the one-smaller-part shape (m, ..., m, s).
XBottleVerdict check_x_bottlegraph(const CompleteMultipartite& b, const Rational& x,
                                   const OrderedGraph& pattern,
                                   long long budget = kDefaultNodeBudget);

}  // namespace ordtile
