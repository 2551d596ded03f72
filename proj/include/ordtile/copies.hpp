#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ordtile/ordered_graph.hpp"

namespace ordtile {

// Order-preserving, edge-preserving (non-induced) map of a pattern into a
// host; images is the strictly increasing list of host vertices.
struct Embedding {
    std::vector<int> images;
    bool operator==(const Embedding&) const = default;
};

struct CopyEnumOptions {
    std::uint64_t allowed = ~std::uint64_t{0};  // host vertices available for images
    std::optional<int> anchor;                  // image must contain this host vertex
    std::optional<int> forced_min;              // smallest image vertex must be exactly this
};

// Depth-first over pattern vertices in label order, images strictly
// increasing, adjacency checked against earlier pattern neighbours.
// Enumeration order is lexicographic on the image vector. The callback may
// return false to stop; the function reports whether it ran to completion.
bool for_each_copy(const OrderedGraph& host, const OrderedGraph& pattern,
                   const CopyEnumOptions& opts,
                   const std::function<bool(const Embedding&)>& fn);

std::vector<Embedding> enumerate_copies(const OrderedGraph& host, const OrderedGraph& pattern,
                                        std::optional<int> anchor = std::nullopt);

long long count_copies(const OrderedGraph& host, const OrderedGraph& pattern,
                       std::optional<int> anchor = std::nullopt);

bool exists_copy(const OrderedGraph& host, const OrderedGraph& pattern,
                 std::optional<int> anchor = std::nullopt);

}  // namespace ordtile
