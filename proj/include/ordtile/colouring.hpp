#pragma once

#include <functional>
#include <vector>

#include "ordtile/ordered_graph.hpp"

namespace ordtile {

// A composition of [h] into consecutive intervals, by interval lengths.
// Interval k (1-based) occupies positions (prefix(k-1), prefix(k)].
struct IntervalColouring {
    std::vector<int> lengths;

    int classes() const { return static_cast<int>(lengths.size()); }
    int total() const {
        int s = 0;
        for (int len : lengths) s += len;
        return s;
    }
    // Sum of the first k lengths.
    int prefix(int k) const {
        int s = 0;
        for (int i = 0; i < k; ++i) s += lengths[i];
        return s;
    }
    // [first, last] positions of class k; empty class gives first > last.
    std::pair<int, int> bounds(int k) const {
        int lo = prefix(k - 1);
        return {lo + 1, lo + lengths[k - 1]};
    }
    // 1-based class containing position v.
    int class_of(int v) const {
        int seen = 0;
        for (int k = 0; k < classes(); ++k) {
            seen += lengths[k];
            if (v <= seen) return k + 1;
        }
        return classes();
    }

    bool is_proper(const OrderedGraph& g) const {
        if (total() != g.h()) return false;
        for (int k = 1; k <= classes(); ++k) {
            auto [a, b] = bounds(k);
            if (a <= b && !g.interval_independent(a, b)) return false;
        }
        return true;
    }

    bool operator==(const IntervalColouring&) const = default;
};

// Left-to-right greedy: a new interval starts exactly when the next vertex is
// adjacent to the current one. Produces a minimum interval partition.
IntervalColouring greedy_interval_colouring(const OrderedGraph& g);

int interval_chromatic(const OrderedGraph& g);
int interval_chromatic(const OrderedGraph& g, IntervalColouring& witness);

// Visits proper colourings with exactly r classes in lexicographic order of
// the length vector. Parts are >= 1 unless allow_empty. Return false from the
// callback to stop early; the function reports whether it ran to completion.
bool for_each_interval_colouring(const OrderedGraph& g, int r, bool allow_empty,
                                 const std::function<bool(const IntervalColouring&)>& fn);

std::vector<IntervalColouring> enumerate_interval_colourings(const OrderedGraph& g, int r,
                                                             bool allow_empty);

}  // namespace ordtile
