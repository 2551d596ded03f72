#pragma once

#include <optional>
#include <vector>

#include "ordtile/colouring.hpp"
#include "ordtile/ordered_graph.hpp"

namespace ordtile {

// Classes i and j of an interval (r+1)-colouring such that every colouring
// whose class i is a singleton {v} has an edge from v into class j. Vacuous
// when no valid singleton-i colouring exists at all.
struct BarrierWitness {
    int i = 0;
    int j = 0;
    bool vacuous = false;
};

struct BarrierRefutation {
    int i = 0;
    int j = 0;
    IntervalColouring colouring;  // singleton-i colouring with no v-to-class-j edge
};

struct BarrierSearchResult {
    std::optional<BarrierWitness> witness;
    std::vector<BarrierRefutation> refutations;  // one per candidate pair when no witness
};

// Candidate pairs are scanned in lexicographic order and the first success is
// returned. Empty classes are allowed among the r+1; class i must be exactly
// a singleton. Requires interval chromatic number >= 2.
BarrierSearchResult find_local_barrier(const OrderedGraph& g);

// One colouring per boundary index i: an (r+1)-colouring whose class i+1 is a
// singleton that can merge into either neighbouring interval.
struct FlexWitnessEntry {
    int index = 0;  // i in [r-1]
    IntervalColouring colouring;
    int movable_vertex = 0;
};

struct FlexibilityResult {
    bool flexible = false;
    std::vector<FlexWitnessEntry> witness;  // complete when flexible
    int blocking_index = 0;                 // first i with no valid colouring otherwise
};

FlexibilityResult is_flexible(const OrderedGraph& g);

// Indices i in [r-1] whose prefix count sum(|V_1..V_i|) is the same in every
// proper interval r-colouring.
std::vector<int> fixed_prefix_indices(const OrderedGraph& g);

}  // namespace ordtile
