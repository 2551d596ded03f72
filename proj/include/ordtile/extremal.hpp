#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtile/multipartite.hpp"
#include "ordtile/ordered_graph.hpp"
#include "ordtile/rational.hpp"
#include "ordtile/tiling.hpp"

namespace ordtile {

// Classes U_1 < ... < U_{r+1} with U_i = {u}; the rest complete r-partite
// among themselves, as equal as possible with |U_j| = floor((n-1)/r); u is
// adjacent to everything outside U_j. Leftover vertices go to the last
// eligible classes.
struct F1Construction {
    OrderedGraph graph;
    std::vector<int> class_sizes;  // r+1 entries
    int u = 0;                     // the singleton vertex
    int min_degree = 0;
};

F1Construction build_f1(int n, int r, int i, int j);

// Complete ceil(n/l)-partite with classes of size l = floor(n/chi* + 1)
// except one class of size at most l. Requires an exact ordered critical
// chromatic number.
CompleteMultipartite build_f2(const OrderedGraph& pattern, int n, const Rational& chi_star_exact);

// First ordering of the bottle, in lexicographic order of size sequences,
// whose realisation has no perfect tiling of the pattern. Existence is
// guaranteed when chi* fed to build_f2 was exact; all orderings tiling
// perfectly therefore signals bad input.
struct AdversarialLabelling {
    OrderedMultipartite ordering;
    long long nodes = 0;
};

AdversarialLabelling adversarial_labelling(const CompleteMultipartite& b,
                                           const OrderedGraph& pattern,
                                           long long budget = kDefaultNodeBudget);

// Complete (chi_< - 1)-partite on n vertices, parts as equal as possible
// (larger parts last); contains no copy of the pattern at all.
struct F3Construction {
    OrderedGraph graph;
    std::vector<int> class_sizes;
    int min_degree = 0;
};

F3Construction build_f3(const OrderedGraph& pattern, int n);

}  // namespace ordtile
