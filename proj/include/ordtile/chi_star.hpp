#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtile/colouring.hpp"
#include "ordtile/ordered_graph.hpp"
#include "ordtile/rational.hpp"

namespace ordtile {

// Extremes of class sizes over all proper interval r-colourings at
// r = interval chromatic number, plus the independent prefix/suffix lengths.
struct ColouringStats {
    int r = 0;
    int ell_minus = 0;       // max first-class size
    int ell_minus_star = 0;  // max last-class size
    int ell_plus = 0;        // max over colourings of the minimum class size
    int alpha_plus = 0;      // longest independent prefix
    int alpha_minus = 0;     // longest independent suffix
    int alpha = 0;           // min(alpha_plus, alpha_minus)
    IntervalColouring ell_plus_colouring;
};

ColouringStats colouring_statistics(const OrderedGraph& g);

struct ChiStarBounds {
    Rational lower;  // attained or approached; always strictly above r-1
    Rational upper;
    std::string lower_source;
    std::string upper_source;
};

// lower = max{ h/l-, h/l-*, (r-1) + (r-1)/(h-1) }, upper = h/l+.
ChiStarBounds chi_star_bounds(const OrderedGraph& g);

struct ChiStarSearchOptions {
    std::optional<int> m_max;         // cap on the repeated part size; default h^2
    long long budget = 2'000'000;     // per-candidate search budget
};

struct ChiStarResult {
    bool exact = false;
    Rational value;        // when exact
    std::string rule;      // which formula or certificate produced the value
    Rational lower;        // always populated
    Rational upper;
    std::string lower_evidence;
    std::string upper_evidence;
    std::optional<std::vector<int>> bottlegraph;  // certifying shape, when found
};

// Exact rules in priority order: bipartite prefix/suffix formula; complete
// multipartite with extreme part first or last; complete 3-partite closed
// form; coinciding bounds; a simple bottlegraph meeting the lower bound
// found by a bounded shape scan. Falls back to an interval.
ChiStarResult chi_star_exact(const OrderedGraph& g, const ChiStarSearchOptions& opts = {});

// Closed form for complete 3-partite patterns with parts (h1, h2, h3):
// (2 - min(h1,h2,h3)/min(h1,h3)) * h / min(h1,h3).
Rational three_partite_formula(int h1, int h2, int h3);

// Part sizes when the graph is complete multipartite (parts are the maximal
// runs of consecutive non-adjacent vertices, all cross pairs adjacent).
std::optional<std::vector<int>> as_complete_multipartite(const OrderedGraph& g);

}  // namespace ordtile
