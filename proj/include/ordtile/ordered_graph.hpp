#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ordtile {

// Vertex sets fit in one machine word; bit v (1-based) stands for vertex v.
inline constexpr int kMaxVertices = 63;

inline std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << v; }

// Bits a..b inclusive; empty mask when a > b.
inline std::uint64_t interval_mask(int a, int b) {
    if (a > b) return 0;
    std::uint64_t hi = (b == 63) ? ~std::uint64_t{0} : (vertex_bit(b + 1) - 1);
    return hi & ~(vertex_bit(a) - 1);
}

// A graph on vertices 1..h whose labelling is the vertex order.
// Immutable after construction.
class OrderedGraph {
public:
    OrderedGraph() : h_(0) {}
    OrderedGraph(int h, const std::vector<std::pair<int, int>>& edges);

    int h() const { return h_; }
    std::uint64_t all_vertices() const { return interval_mask(1, h_); }

    bool has_edge(int u, int v) const { return (adj_[u] & vertex_bit(v)) != 0; }
    std::uint64_t neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }
    int min_degree() const;

    std::size_t edge_count() const { return edges_.size(); }
    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // No edge of the graph lies inside [a, b].
    bool interval_independent(int a, int b) const {
        std::uint64_t mask = interval_mask(a, b);
        for (int v = a; v <= b; ++v)
            if (adj_[v] & mask) return false;
        return true;
    }

    bool operator==(const OrderedGraph& other) const {
        return h_ == other.h_ && edges_ == other.edges_;
    }

private:
    int h_;
    std::vector<std::uint64_t> adj_;  // indexed 1..h
    std::vector<std::pair<int, int>> edges_;
};

OrderedGraph complete_graph(int h);

// Shared text format: first significant line is h, then one "u v" edge per
// line with u < v; '#' starts a comment.
OrderedGraph parse_ordered_graph(const std::string& text);
std::string format_ordered_graph(const OrderedGraph& g);
OrderedGraph load_ordered_graph(const std::string& path);
void save_ordered_graph(const OrderedGraph& g, const std::string& path);

}  // namespace ordtile
