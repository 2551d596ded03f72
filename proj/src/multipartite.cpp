#include "ordtile/multipartite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ordtile/chi_star.hpp"
#include "ordtile/colouring.hpp"
#include "ordtile/structure.hpp"

namespace ordtile {

CompleteMultipartite::CompleteMultipartite(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw std::invalid_argument("multipartite graph needs at least one part");
    for (int x : sizes)
        if (x < 1) throw std::invalid_argument("part sizes must be positive");
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
}

long long CompleteMultipartite::total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0LL);
}

long long OrderedMultipartite::total() const {
    return std::accumulate(sizes_in_order.begin(), sizes_in_order.end(), 0LL);
}

int OrderedMultipartite::part_of(long long v) const {
    long long seen = 0;
    for (int k = 0; k < parts(); ++k) {
        seen += sizes_in_order[k];
        if (v <= seen) return k + 1;
    }
    return parts();
}

Rational crit_chrom(const CompleteMultipartite& b) {
    if (b.parts() < 2)
        throw std::invalid_argument("critical chromatic number needs at least two parts");
    long long n = b.total();
    return Rational((b.parts() - 1) * n, n - b.smallest());
}

std::vector<OrderedMultipartite> distinct_orderings(const CompleteMultipartite& b) {
    std::vector<int> seq = b.sizes;
    std::sort(seq.begin(), seq.end());
    std::vector<OrderedMultipartite> out;
    do {
        out.push_back(OrderedMultipartite{seq});
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

OrderedMultipartite blow_up(const OrderedMultipartite& b, int t) {
    if (t < 1) throw std::invalid_argument("blow-up factor must be >= 1");
    OrderedMultipartite out = b;
    for (int& s : out.sizes_in_order) s *= t;
    return out;
}

OrderedGraph to_ordered_graph(const OrderedMultipartite& b) {
    long long n = b.total();
    if (n > kMaxVertices)
        throw std::invalid_argument("multipartite graph too large to realise concretely");
    std::vector<std::pair<int, int>> edges;
    int start = 1;
    std::vector<std::pair<int, int>> part_ranges;
    for (int s : b.sizes_in_order) {
        part_ranges.emplace_back(start, start + s - 1);
        start += s;
    }
    for (std::size_t p = 0; p < part_ranges.size(); ++p)
        for (std::size_t q = p + 1; q < part_ranges.size(); ++q)
            for (int u = part_ranges[p].first; u <= part_ranges[p].second; ++u)
                for (int v = part_ranges[q].first; v <= part_ranges[q].second; ++v)
                    edges.emplace_back(u, v);
    return OrderedGraph(static_cast<int>(n), edges);
}

CompleteMultipartite normalize_bottleshape(const CompleteMultipartite& b) {
    if (b.parts() < 2) throw std::invalid_argument("need at least two parts");
    int k = b.parts();
    long long n = b.total();
    int small = b.smallest();
    std::vector<int> sizes;
    sizes.push_back((k - 1) * small);
    for (int i = 0; i < k - 1; ++i) sizes.push_back(static_cast<int>(n - small));
    return CompleteMultipartite(sizes);
}

std::string to_string(BottleStatus s) {
    switch (s) {
        case BottleStatus::SimpleYes: return "simple_yes";
        case BottleStatus::BoundedYes: return "bounded_yes";
        case BottleStatus::NotSimple: return "not_simple";
        case BottleStatus::No: return "no";
        case BottleStatus::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(NoCertificateKind k) {
    switch (k) {
        case NoCertificateKind::PartCount: return "PartCount";
        case NoCertificateKind::CountingFirstPart: return "CountingFirstPart";
        case NoCertificateKind::CountingLastPart: return "CountingLastPart";
        case NoCertificateKind::StrongLower: return "StrongLower";
    }
    return "unknown";
}

BottleVerdict check_simple_bottlegraph(const CompleteMultipartite& b, const OrderedGraph& pattern,
                                       long long budget) {
    if (b.total() % pattern.h() != 0)
        throw std::invalid_argument("pattern size must divide the bottle size");
    BottleVerdict verdict;
    if (b.total() > kMaxVertices) {
        verdict.status = BottleStatus::Unknown;
        verdict.note = "bottle exceeds the concrete vertex cap";
        return verdict;
    }
    for (const auto& ordering : distinct_orderings(b)) {
        TilingAnswer answer = perfect_tiling(to_ordered_graph(ordering), pattern, budget);
        if (answer.status == TilingStatus::Timeout) {
            verdict.status = BottleStatus::Unknown;
            verdict.note = "search budget exhausted";
            return verdict;
        }
        if (answer.status != TilingStatus::PerfectFound) {
            verdict.status = BottleStatus::NotSimple;
            verdict.failing_ordering = ordering;
            return verdict;
        }
        verdict.witnesses.push_back(OrderingWitness{ordering, 1, *answer.witness});
    }
    verdict.status = BottleStatus::SimpleYes;
    return verdict;
}

BottleVerdict check_bottlegraph_bounded(const CompleteMultipartite& b,
                                        const OrderedGraph& pattern, int t_max,
                                        long long budget) {
    BottleVerdict verdict;
    ColouringStats stats = colouring_statistics(pattern);
    int h = pattern.h();
    int r = stats.r;
    if (b.parts() < r) {
        verdict.status = BottleStatus::No;
        verdict.certificate = NoCertificate{NoCertificateKind::PartCount,
                                            Rational(b.parts()), Rational(r)};
        return verdict;
    }
    if (b.parts() >= 2) {
        Rational cc = crit_chrom(b);
        if (cc < Rational(h, stats.ell_minus)) {
            verdict.status = BottleStatus::No;
            verdict.certificate = NoCertificate{NoCertificateKind::CountingFirstPart, cc,
                                                Rational(h, stats.ell_minus)};
            return verdict;
        }
        if (cc < Rational(h, stats.ell_minus_star)) {
            verdict.status = BottleStatus::No;
            verdict.certificate = NoCertificate{NoCertificateKind::CountingLastPart, cc,
                                                Rational(h, stats.ell_minus_star)};
            return verdict;
        }
        if (b.parts() == r && h >= 2) {
            Rational strong = Rational(r - 1) + Rational(r - 1, h - 1);
            if (cc < strong) {
                verdict.status = BottleStatus::No;
                verdict.certificate =
                    NoCertificate{NoCertificateKind::StrongLower, cc, strong};
                return verdict;
            }
        }
    }
    std::map<std::pair<std::vector<int>, int>, bool> memo;
    bool any_unresolved = false;
    for (const auto& ordering : distinct_orderings(b)) {
        std::optional<int> found_t;
        for (int t = 1; t <= t_max; ++t) {
            if ((b.total() * t) % h != 0) continue;
            if (b.total() * t > kMaxVertices) break;
            OrderedMultipartite blown = blow_up(ordering, t);
            auto key = std::make_pair(blown.sizes_in_order, t);
            auto it = memo.find(key);
            bool tiles;
            TilingWitness witness;
            if (it != memo.end() && !it->second) {
                tiles = false;
            } else {
                TilingAnswer answer = perfect_tiling(to_ordered_graph(blown), pattern, budget);
                if (answer.status == TilingStatus::Timeout) {
                    verdict.status = BottleStatus::Unknown;
                    verdict.note = "search budget exhausted";
                    return verdict;
                }
                tiles = answer.status == TilingStatus::PerfectFound;
                memo[key] = tiles;
                if (tiles) witness = *answer.witness;
            }
            if (tiles) {
                found_t = t;
                verdict.witnesses.push_back(OrderingWitness{ordering, t, witness});
                break;
            }
        }
        if (!found_t) any_unresolved = true;
    }
    if (any_unresolved) {
        verdict.status = BottleStatus::Unknown;
        verdict.note = "no blow-up factor within t_max worked; not a disproof";
        verdict.witnesses.clear();
        return verdict;
    }
    verdict.status = BottleStatus::BoundedYes;
    return verdict;
}

bool verify_multipartite_tiling(const OrderedMultipartite& host, const OrderedGraph& pattern,
                                const std::vector<std::vector<long long>>& copies,
                                bool require_perfect, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    long long n = host.total();
    std::vector<long long> all;
    for (const auto& copy : copies) {
        if (static_cast<int>(copy.size()) != pattern.h()) return fail("copy has wrong size");
        for (std::size_t i = 0; i + 1 < copy.size(); ++i)
            if (copy[i] >= copy[i + 1]) return fail("copy not strictly increasing");
        if (copy.front() < 1 || copy.back() > n) return fail("copy vertex out of range");
        for (auto [a, b] : pattern.edges())
            if (host.part_of(copy[a - 1]) == host.part_of(copy[b - 1]))
                return fail("pattern edge lands inside one part");
        all.insert(all.end(), copy.begin(), copy.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return fail("copies overlap");
    if (require_perfect && static_cast<long long>(all.size()) != n)
        return fail("witness does not cover every vertex");
    return true;
}

MultipartiteTiling UpperboundConstruction::tile(const OrderedMultipartite& ordering) const {
    std::vector<int> check = ordering.sizes_in_order;
    std::sort(check.begin(), check.end(), std::greater<int>());
    if (check != bottle.sizes)
        throw std::invalid_argument("ordering does not match the constructed bottle");
    long long factorial = 1;
    int h = 0;
    for (int len : colouring_lengths) h += len;
    for (int i = 2; i <= h; ++i) factorial *= i;
    MultipartiteTiling out;
    out.host = ordering;
    long long class_start = 0;  // t_{i-1}: scaled prefix of earlier classes
    std::vector<std::vector<long long>> copies(factorial);
    for (long long j = 0; j < factorial; ++j) copies[j].reserve(h);
    for (int len : colouring_lengths) {
        for (long long j = 0; j < factorial; ++j)
            for (int p = 0; p < len; ++p)
                copies[j].push_back(class_start + j * len + p + 1);
        class_start += static_cast<long long>(len) * factorial;
    }
    out.copies = std::move(copies);
    return out;
}

UpperboundConstruction upperbound_construction(const OrderedGraph& pattern) {
    int h = pattern.h();
    if (h > 8)
        throw std::invalid_argument("h! scaling is only materialised for h <= 8");
    ColouringStats stats = colouring_statistics(pattern);
    long long factorial = 1;
    for (int i = 2; i <= h; ++i) factorial *= i;
    int k = h / stats.ell_plus;
    std::vector<int> sizes(k, static_cast<int>(stats.ell_plus * factorial));
    int remainder = h - k * stats.ell_plus;
    if (remainder > 0) sizes.push_back(static_cast<int>(remainder * factorial));
    return UpperboundConstruction{CompleteMultipartite(sizes), stats.ell_plus,
                                  stats.ell_plus_colouring.lengths};
}

namespace {

// A tile is the class-size vector of one pattern copy across the r parts.
using Tile = std::vector<int>;

struct FrameBuilder {
    int r;
    int h;
    std::vector<Tile> merged_left;             // per boundary index i (0-based)
    std::vector<Tile> merged_right;
    std::vector<long long> base_sizes;         // |F_k|
    Tile base_colouring;                       // any proper r-colouring of the pattern

    // Lemma regime: signed offsets, zero sum, |s_k| <= h.
    std::vector<Tile> lemma_tiles(const std::vector<long long>& s) const {
        std::vector<Tile> tiles;
        long long prefix = 0;
        for (int i = 0; i < r - 1; ++i) {
            prefix += s[i];
            long long left_count = static_cast<long long>(r) * h + prefix;
            long long right_count = static_cast<long long>(r) * h - prefix;
            if (left_count < 0 || right_count < 0)
                throw std::logic_error("perturbation out of range");
            for (long long c = 0; c < left_count; ++c) tiles.push_back(merged_left[i]);
            for (long long c = 0; c < right_count; ++c) tiles.push_back(merged_right[i]);
        }
        return tiles;
    }

    // Corollary regime: nonnegative offsets with sum = ell * h, realised on
    // the blow-up by t >= ell. Follows the X / Y / W / Z decomposition.
    std::vector<Tile> corollary_tiles(int t, const std::vector<long long>& s) const {
        long long sum = std::accumulate(s.begin(), s.end(), 0LL);
        long long ell = sum / h;
        std::vector<Tile> tiles;
        if (ell == 0) {
            std::vector<Tile> base = lemma_tiles(std::vector<long long>(r, 0));
            for (int rep = 0; rep < t; ++rep)
                tiles.insert(tiles.end(), base.begin(), base.end());
            return tiles;
        }
        // s' <= s componentwise with sum h, taken greedily.
        std::vector<long long> s_prime(r, 0);
        long long need = h;
        for (int k = 0; k < r && need > 0; ++k) {
            s_prime[k] = std::min<long long>(s[k], need);
            need -= s_prime[k];
        }
        std::vector<Tile> x_part = corollary_tiles(t - static_cast<int>(ell),
                                                   std::vector<long long>(r, 0));
        tiles.insert(tiles.end(), x_part.begin(), x_part.end());
        std::vector<long long> s_rest(r);
        for (int k = 0; k < r; ++k) s_rest[k] = s[k] - s_prime[k];
        std::vector<Tile> y_part = corollary_tiles(static_cast<int>(ell) - 1, s_rest);
        tiles.insert(tiles.end(), y_part.begin(), y_part.end());
        tiles.push_back(base_colouring);
        std::vector<long long> z_offsets(r);
        for (int k = 0; k < r; ++k) z_offsets[k] = s_prime[k] - base_colouring[k];
        std::vector<Tile> z_part = lemma_tiles(z_offsets);
        tiles.insert(tiles.end(), z_part.begin(), z_part.end());
        return tiles;
    }
};

std::vector<std::vector<long long>> materialise(const std::vector<long long>& part_sizes,
                                                const std::vector<Tile>& tiles) {
    int r = static_cast<int>(part_sizes.size());
    std::vector<long long> cursor(r, 0);
    std::vector<long long> part_start(r, 0);
    for (int k = 1; k < r; ++k) part_start[k] = part_start[k - 1] + part_sizes[k - 1];
    std::vector<std::vector<long long>> copies;
    copies.reserve(tiles.size());
    for (const Tile& tile : tiles) {
        std::vector<long long> copy;
        for (int k = 0; k < r; ++k)
            for (int p = 0; p < tile[k]; ++p) copy.push_back(part_start[k] + ++cursor[k]);
        copies.push_back(std::move(copy));
    }
    for (int k = 0; k < r; ++k)
        if (cursor[k] != part_sizes[k])
            throw std::logic_error("frame tiling does not exhaust part " + std::to_string(k + 1));
    return copies;
}

}  // namespace

FlexibleFrame flexible_frame(const OrderedGraph& pattern, const std::vector<long long>& offsets,
                             int t) {
    int h = pattern.h();
    FlexibilityResult flex = is_flexible(pattern);
    if (!flex.flexible)
        throw std::invalid_argument("pattern is not flexible (blocked at boundary " +
                                    std::to_string(flex.blocking_index) + ")");
    int r = interval_chromatic(pattern);
    if (static_cast<int>(offsets.size()) != r)
        throw std::invalid_argument("need one offset per part");
    if (t < 1) throw std::invalid_argument("blow-up factor must be >= 1");

    FrameBuilder builder;
    builder.r = r;
    builder.h = h;
    builder.base_colouring = greedy_interval_colouring(pattern).lengths;
    for (const FlexWitnessEntry& entry : flex.witness) {
        // Class sizes of V_1..V_r (the singleton removed), then the singleton
        // merged into its left or right neighbour.
        Tile classes;
        for (int k = 1; k <= r + 1; ++k)
            if (k != entry.index + 1) classes.push_back(entry.colouring.lengths[k - 1]);
        Tile left = classes, right = classes;
        left[entry.index - 1] += 1;
        right[entry.index] += 1;
        builder.merged_left.push_back(left);
        builder.merged_right.push_back(right);
    }
    builder.base_sizes.assign(r, 0);
    for (int k = 0; k < r; ++k) {
        long long acc = (k == 0 || k == r - 1) ? static_cast<long long>(r) * h
                                               : 2LL * r * h;
        for (const FlexWitnessEntry& entry : flex.witness) {
            Tile classes;
            for (int c = 1; c <= r + 1; ++c)
                if (c != entry.index + 1) classes.push_back(entry.colouring.lengths[c - 1]);
            acc += 2LL * r * h * classes[k];
        }
        builder.base_sizes[k] = acc;
    }

    long long sum = std::accumulate(offsets.begin(), offsets.end(), 0LL);
    bool has_negative = std::any_of(offsets.begin(), offsets.end(),
                                    [](long long v) { return v < 0; });
    std::vector<Tile> tiles;
    std::vector<long long> part_sizes(r);
    if (has_negative || (sum == 0 && t == 1)) {
        if (sum != 0) throw std::invalid_argument("signed offsets must sum to zero");
        if (t != 1) throw std::invalid_argument("signed offsets apply to the unblown frame");
        for (long long v : offsets)
            if (v < -h || v > h)
                throw std::invalid_argument("offsets must have absolute value <= |pattern|");
        tiles = builder.lemma_tiles(offsets);
        for (int k = 0; k < r; ++k) part_sizes[k] = builder.base_sizes[k] + offsets[k];
    } else {
        if (sum % h != 0)
            throw std::invalid_argument("nonnegative offsets must sum to a multiple of |pattern|");
        long long ell = sum / h;
        if (ell > t)
            throw std::invalid_argument("offset total exceeds t * |pattern|");
        tiles = builder.corollary_tiles(t, offsets);
        for (int k = 0; k < r; ++k) part_sizes[k] = t * builder.base_sizes[k] + offsets[k];
    }

    FlexibleFrame out;
    for (long long v : builder.base_sizes)
        out.base_frame.sizes_in_order.push_back(static_cast<int>(v));
    for (long long v : part_sizes) out.frame.sizes_in_order.push_back(static_cast<int>(v));
    out.copies = materialise(part_sizes, tiles);
    return out;
}

OrderedMultipartite parse_parts_line(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    if (tag != "parts:") throw std::invalid_argument("expected a line 'parts: s1 s2 ... sk'");
    OrderedMultipartite out;
    int s;
    while (in >> s) {
        if (s < 1) throw std::invalid_argument("part sizes must be positive");
        out.sizes_in_order.push_back(s);
    }
    if (!in.eof()) throw std::invalid_argument("bad token in parts line");
    if (out.sizes_in_order.empty()) throw std::invalid_argument("no part sizes given");
    return out;
}

std::string format_parts_line(const OrderedMultipartite& parts) {
    std::ostringstream out;
    out << "parts:";
    for (int s : parts.sizes_in_order) out << " " << s;
    out << "\n";
    return out.str();
}

}  // namespace ordtile
