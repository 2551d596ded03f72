#include "ordtile/colouring.hpp"

#include <stdexcept>

namespace ordtile {

IntervalColouring greedy_interval_colouring(const OrderedGraph& g) {
    IntervalColouring col;
    std::uint64_t current = 0;
    int len = 0;
    for (int v = 1; v <= g.h(); ++v) {
        if (g.neighbours(v) & current) {
            col.lengths.push_back(len);
            current = 0;
            len = 0;
        }
        current |= vertex_bit(v);
        ++len;
    }
    col.lengths.push_back(len);
    return col;
}

int interval_chromatic(const OrderedGraph& g) {
    IntervalColouring w;
    return interval_chromatic(g, w);
}

int interval_chromatic(const OrderedGraph& g, IntervalColouring& witness) {
    witness = greedy_interval_colouring(g);
    return witness.classes();
}

namespace {

bool walk_colourings(const OrderedGraph& g, int r, int min_part, int k, int start,
                     std::vector<int>& lengths,
                     const std::function<bool(const IntervalColouring&)>& fn) {
    int remaining = g.h() - start + 1;
    if (k == r) {
        if (remaining < min_part) return true;
        if (remaining > 0 && !g.interval_independent(start, g.h())) return true;
        lengths.push_back(remaining);
        IntervalColouring col{lengths};
        bool keep = fn(col);
        lengths.pop_back();
        return keep;
    }
    int max_len = remaining - min_part * (r - k);
    for (int len = min_part; len <= max_len; ++len) {
        if (len > 0 && !g.interval_independent(start, start + len - 1)) break;
        lengths.push_back(len);
        bool keep = walk_colourings(g, r, min_part, k + 1, start + len, lengths, fn);
        lengths.pop_back();
        if (!keep) return false;
    }
    return true;
}

}  // namespace

bool for_each_interval_colouring(const OrderedGraph& g, int r, bool allow_empty,
                                 const std::function<bool(const IntervalColouring&)>& fn) {
    if (r < 1) throw std::invalid_argument("class count must be >= 1");
    std::vector<int> lengths;
    lengths.reserve(r);
    return walk_colourings(g, r, allow_empty ? 0 : 1, 1, 1, lengths, fn);
}

std::vector<IntervalColouring> enumerate_interval_colourings(const OrderedGraph& g, int r,
                                                             bool allow_empty) {
    std::vector<IntervalColouring> out;
    for_each_interval_colouring(g, r, allow_empty, [&](const IntervalColouring& col) {
        out.push_back(col);
        return true;
    });
    return out;
}

}  // namespace ordtile
