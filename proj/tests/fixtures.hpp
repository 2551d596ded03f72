#pragma once

#include <vector>

#include "ordtile/multipartite.hpp"
#include "ordtile/ordered_graph.hpp"

namespace fixtures {

using ordtile::OrderedGraph;

inline OrderedGraph edge2() { return OrderedGraph(2, {{1, 2}}); }
inline OrderedGraph k3() { return ordtile::complete_graph(3); }
inline OrderedGraph k4() { return ordtile::complete_graph(4); }

// 11-vertex graph with a long chord and three short ones; chi_< = 4.
inline OrderedGraph long_chords() {
    return OrderedGraph(11, {{1, 11}, {2, 5}, {5, 8}, {8, 11}});
}

// The 7-vertex spaced path 1-3-5-7; chi_< = 4, no local barrier, flexible.
inline OrderedGraph spaced_path7() { return OrderedGraph(7, {{1, 3}, {3, 5}, {5, 7}}); }

// The 5-vertex spaced path 1-3-5; chi_< = 3.
inline OrderedGraph spaced_path5() { return OrderedGraph(5, {{1, 3}, {3, 5}}); }

// 8 vertices, edges {1-8, 2-5, 5-8}; chi_< = 3 and a local barrier.
inline OrderedGraph chord_path8() { return OrderedGraph(8, {{1, 8}, {2, 5}, {5, 8}}); }

// Complete bipartite K_{2,2} with interval labelling.
inline OrderedGraph k22_interval() {
    return OrderedGraph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

inline OrderedGraph complete_multipartite_graph(const std::vector<int>& sizes) {
    return ordtile::to_ordered_graph(ordtile::OrderedMultipartite{sizes});
}

inline OrderedGraph c212() { return complete_multipartite_graph({2, 1, 2}); }
inline OrderedGraph c112() { return complete_multipartite_graph({1, 1, 2}); }
inline OrderedGraph c122() { return complete_multipartite_graph({1, 2, 2}); }

// All ordered graphs on exactly h vertices, by edge-set bitmask.
template <typename Fn>
void for_each_graph(int h, Fn&& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= h; ++u)
        for (int v = u + 1; v <= h; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) edges.push_back(slots[b]);
        fn(OrderedGraph(h, edges));
    }
}

}  // namespace fixtures
