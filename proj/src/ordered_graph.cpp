#include "ordtile/ordered_graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ordtile {

OrderedGraph::OrderedGraph(int h, const std::vector<std::pair<int, int>>& edges) : h_(h) {
    if (h < 1 || h > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, " +
                                    std::to_string(kMaxVertices) + "]");
    adj_.assign(h + 1, 0);
    edges_ = edges;
    for (auto& [u, v] : edges_) {
        if (u >= v) std::swap(u, v);
        if (u < 1 || v > h)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u] |= vertex_bit(v);
        adj_[v] |= vertex_bit(u);
    }
}

int OrderedGraph::min_degree() const {
    int d = h_;
    for (int v = 1; v <= h_; ++v) d = std::min(d, degree(v));
    return d;
}

OrderedGraph complete_graph(int h) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= h; ++u)
        for (int v = u + 1; v <= h; ++v) edges.emplace_back(u, v);
    return OrderedGraph(h, edges);
}

OrderedGraph parse_ordered_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int h = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (h < 0) {
            if (!(fields >> h)) {
                h = -1;
                continue;  // blank or comment-only line before the header
            }
            std::string rest;
            if (fields >> rest)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": header must be a single vertex count");
            continue;
        }
        int u, v;
        if (!(fields >> u)) continue;
        if (!(fields >> v))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'u v'");
        std::string rest;
        if (fields >> rest)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing tokens");
        if (u >= v)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": require u < v");
        edges.emplace_back(u, v);
    }
    if (h < 0) throw std::invalid_argument("missing vertex count");
    std::vector<std::pair<int, int>> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate edge");
    return OrderedGraph(h, edges);
}

std::string format_ordered_graph(const OrderedGraph& g) {
    std::ostringstream out;
    out << g.h() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

OrderedGraph load_ordered_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ordered_graph(buf.str());
}

void save_ordered_graph(const OrderedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << format_ordered_graph(g);
}

}  // namespace ordtile
