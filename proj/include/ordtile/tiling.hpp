#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordtile/ordered_graph.hpp"

namespace ordtile {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

// Raised where an exhausted budget leaves a question undecidable; plain
// searches report Timeout as a result instead.
struct TimeoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A collection of pairwise-disjoint vertex sets, each spanning a copy of the
// pattern when taken in increasing vertex order.
struct TilingWitness {
    std::vector<std::vector<int>> copies;
};

enum class TilingStatus { PerfectFound, NoPerfect, MaxCover, Timeout };

std::string to_string(TilingStatus s);

struct TilingAnswer {
    TilingStatus status = TilingStatus::Timeout;
    std::optional<TilingWitness> witness;
    long long nodes = 0;
    int max_copies = 0;     // MaxCover: exact maximum, or best found in target mode
    bool target_met = false;
};

// Exact-cover backtracking: branch on the smallest uncovered vertex and
// enumerate copies whose minimum image is that vertex. |pattern| dividing
// |host| is checked up front; exceeding the node budget yields Timeout,
// never NoPerfect.
TilingAnswer perfect_tiling(const OrderedGraph& host, const OrderedGraph& pattern,
                            long long budget = kDefaultNodeBudget);

// With a target: decides whether `target` disjoint copies exist (target_met),
// exhaustion proving impossibility, or Timeout. Without: the exact maximum
// number of disjoint copies.
TilingAnswer max_tiling(const OrderedGraph& host, const OrderedGraph& pattern,
                        std::optional<int> target = std::nullopt,
                        long long budget = kDefaultNodeBudget);

// Vertices of the host contained in no copy of the pattern.
std::vector<int> h_cover_uncovered(const OrderedGraph& host, const OrderedGraph& pattern);

// Checks the witness invariants directly against the two graphs; kept
// independent of the search code path.
bool verify_tiling(const OrderedGraph& host, const OrderedGraph& pattern,
                   const TilingWitness& witness, bool require_perfect,
                   std::string* reason = nullptr);

}  // namespace ordtile
