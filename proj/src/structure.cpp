#include "ordtile/structure.hpp"

#include <stdexcept>

namespace ordtile {

namespace {

void require_chromatic_at_least_two(const OrderedGraph& g, int r) {
    if (r < 2)
        throw std::invalid_argument("operation needs interval chromatic number >= 2, got " +
                                    std::to_string(r));
}

// Visits every proper interval colouring with `classes` classes (empties
// allowed) in which class `singleton` has length exactly 1.
bool for_each_singleton_colouring(const OrderedGraph& g, int classes, int singleton,
                                  const std::function<bool(const IntervalColouring&)>& fn) {
    std::vector<int> lengths(classes, 0);
    std::function<bool(int, int)> walk = [&](int k, int start) -> bool {
        if (k > classes) return fn(IntervalColouring{lengths});
        int remaining = g.h() - start + 1;
        if (k == singleton) {
            if (remaining < 1) return true;
            lengths[k - 1] = 1;
            bool keep = walk(k + 1, start + 1);
            lengths[k - 1] = 0;
            return keep;
        }
        int reserved = (singleton >= k) ? 1 : 0;  // room for the singleton later
        for (int len = 0; len <= remaining - reserved; ++len) {
            if (len > 0 && !g.interval_independent(start, start + len - 1)) break;
            lengths[k - 1] = len;
            bool keep = walk(k + 1, start + len);
            lengths[k - 1] = 0;
            if (!keep) return false;
        }
        return true;
    };
    return walk(1, 1);
}

bool has_edge_to_class(const OrderedGraph& g, int v, const IntervalColouring& col, int j) {
    auto [a, b] = col.bounds(j);
    return (g.neighbours(v) & interval_mask(a, b)) != 0;
}

}  // namespace

BarrierSearchResult find_local_barrier(const OrderedGraph& g) {
    int r = interval_chromatic(g);
    require_chromatic_at_least_two(g, r);
    BarrierSearchResult result;
    for (int i = 1; i <= r + 1; ++i) {
        for (int j = 1; j <= r + 1; ++j) {
            if (i == j) continue;
            bool holds = true;
            bool saw_any = false;
            std::optional<IntervalColouring> refuting;
            for_each_singleton_colouring(g, r + 1, i, [&](const IntervalColouring& col) {
                saw_any = true;
                int v = col.bounds(i).first;
                if (!has_edge_to_class(g, v, col, j)) {
                    holds = false;
                    refuting = col;
                    return false;
                }
                return true;
            });
            if (holds) {
                result.witness = BarrierWitness{i, j, !saw_any};
                return result;
            }
            result.refutations.push_back(BarrierRefutation{i, j, *refuting});
        }
    }
    return result;
}

FlexibilityResult is_flexible(const OrderedGraph& g) {
    int r = interval_chromatic(g);
    require_chromatic_at_least_two(g, r);
    FlexibilityResult result;
    for (int i = 1; i <= r - 1; ++i) {
        std::optional<FlexWitnessEntry> found;
        for_each_singleton_colouring(g, r + 1, i + 1, [&](const IntervalColouring& col) {
            // Merge the singleton left into class i, or right into class i+2.
            IntervalColouring left, right;
            for (int k = 1; k <= r + 1; ++k) {
                if (k == i + 1) continue;
                int len = col.lengths[k - 1];
                left.lengths.push_back(len + (k == i ? 1 : 0));
                right.lengths.push_back(len + (k == i + 2 ? 1 : 0));
            }
            if (!left.is_proper(g) || !right.is_proper(g)) return true;
            // At chromatic level every proper r-colouring has nonempty classes.
            for (int len : left.lengths)
                if (len == 0) throw std::logic_error("empty class in merged r-colouring");
            for (int len : right.lengths)
                if (len == 0) throw std::logic_error("empty class in merged r-colouring");
            found = FlexWitnessEntry{i, col, col.bounds(i + 1).first};
            return false;
        });
        if (!found) {
            result.flexible = false;
            result.blocking_index = i;
            result.witness.clear();
            return result;
        }
        result.witness.push_back(*found);
    }
    result.flexible = true;
    return result;
}

std::vector<int> fixed_prefix_indices(const OrderedGraph& g) {
    int r = interval_chromatic(g);
    require_chromatic_at_least_two(g, r);
    std::vector<int> first_seen(r, -1);
    std::vector<bool> varies(r, false);
    for_each_interval_colouring(g, r, /*allow_empty=*/false, [&](const IntervalColouring& col) {
        int prefix = 0;
        for (int i = 1; i <= r - 1; ++i) {
            prefix += col.lengths[i - 1];
            if (first_seen[i] == -1)
                first_seen[i] = prefix;
            else if (first_seen[i] != prefix)
                varies[i] = true;
        }
        return true;
    });
    std::vector<int> fixed;
    for (int i = 1; i <= r - 1; ++i)
        if (!varies[i]) fixed.push_back(i);
    return fixed;
}

}  // namespace ordtile
