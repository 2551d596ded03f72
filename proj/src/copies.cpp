#include "ordtile/copies.hpp"

namespace ordtile {

namespace {

struct CopySearch {
    const OrderedGraph& host;
    const OrderedGraph& pattern;
    const CopyEnumOptions& opts;
    const std::function<bool(const Embedding&)>& fn;
    std::vector<int> images;

    bool place(int k, int from) {
        int h = pattern.h();
        if (k > h) {
            return fn(Embedding{images});
        }
        int last = host.h() - (h - k);
        for (int g = from; g <= last; ++g) {
            if (!(opts.allowed & vertex_bit(g))) continue;
            // Images grow, so a skipped anchor can never be picked up later.
            if (opts.anchor && g > *opts.anchor && !anchor_used()) break;
            bool ok = true;
            std::uint64_t pat_nbrs = pattern.neighbours(k);
            for (int j = 1; j < k && ok; ++j)
                if (pat_nbrs & vertex_bit(j))
                    ok = host.has_edge(images[j - 1], g);
            if (!ok) continue;
            images.push_back(g);
            bool keep = place(k + 1, g + 1);
            images.pop_back();
            if (!keep) return false;
        }
        return true;
    }

    bool anchor_used() const {
        for (int v : images)
            if (v == *opts.anchor) return true;
        return false;
    }
};

}  // namespace

bool for_each_copy(const OrderedGraph& host, const OrderedGraph& pattern,
                   const CopyEnumOptions& opts,
                   const std::function<bool(const Embedding&)>& fn) {
    if (pattern.h() > host.h()) return true;
    CopySearch search{host, pattern, opts, fn, {}};
    search.images.reserve(pattern.h());
    if (opts.forced_min) {
        int v = *opts.forced_min;
        if (!(opts.allowed & vertex_bit(v))) return true;
        if (opts.anchor && *opts.anchor < v) return true;
        search.images.push_back(v);
        return search.place(2, v + 1);
    }
    return search.place(1, 1);
}

std::vector<Embedding> enumerate_copies(const OrderedGraph& host, const OrderedGraph& pattern,
                                        std::optional<int> anchor) {
    std::vector<Embedding> out;
    CopyEnumOptions opts;
    opts.anchor = anchor;
    for_each_copy(host, pattern, opts, [&](const Embedding& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

long long count_copies(const OrderedGraph& host, const OrderedGraph& pattern,
                       std::optional<int> anchor) {
    long long n = 0;
    CopyEnumOptions opts;
    opts.anchor = anchor;
    for_each_copy(host, pattern, opts, [&](const Embedding&) {
        ++n;
        return true;
    });
    return n;
}

bool exists_copy(const OrderedGraph& host, const OrderedGraph& pattern,
                 std::optional<int> anchor) {
    CopyEnumOptions opts;
    opts.anchor = anchor;
    bool completed = for_each_copy(host, pattern, opts, [](const Embedding&) { return false; });
    return !completed;
}

}  // namespace ordtile
