#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordtile/ordered_graph.hpp"
#include "ordtile/rational.hpp"
#include "ordtile/tiling.hpp"

namespace ordtile {

// Part-size multiset of a complete multipartite graph, stored descending.
struct CompleteMultipartite {
    std::vector<int> sizes;

    explicit CompleteMultipartite(std::vector<int> s);
    int parts() const { return static_cast<int>(sizes.size()); }
    long long total() const;
    int smallest() const { return sizes.back(); }
};

// Left-to-right part-size sequence; equal-size parts are interchangeable, so
// the sequence determines the ordered graph completely.
struct OrderedMultipartite {
    std::vector<int> sizes_in_order;

    int parts() const { return static_cast<int>(sizes_in_order.size()); }
    long long total() const;
    // 1-based part containing global position v.
    int part_of(long long v) const;
    bool operator==(const OrderedMultipartite&) const = default;
    bool operator<(const OrderedMultipartite& o) const {
        return sizes_in_order < o.sizes_in_order;
    }
};

// (chi - 1) * |B| / (|B| - smallest part); needs at least two parts.
Rational crit_chrom(const CompleteMultipartite& b);

// One representative per distinct size sequence, in lexicographic order.
std::vector<OrderedMultipartite> distinct_orderings(const CompleteMultipartite& b);

OrderedMultipartite blow_up(const OrderedMultipartite& b, int t);

// Concrete realisation; total size must fit the vertex cap.
OrderedGraph to_ordered_graph(const OrderedMultipartite& b);

// Same critical chromatic number, reshaped to one part of size (k-1)*min and
// k-1 parts of size |B|-min.
CompleteMultipartite normalize_bottleshape(const CompleteMultipartite& b);

enum class BottleStatus { SimpleYes, BoundedYes, NotSimple, No, Unknown };
std::string to_string(BottleStatus s);

enum class NoCertificateKind { PartCount, CountingFirstPart, CountingLastPart, StrongLower };
std::string to_string(NoCertificateKind k);

// A machine-checkable inequality: lhs < rhs disqualifies the candidate.
struct NoCertificate {
    NoCertificateKind kind;
    Rational lhs;
    Rational rhs;
};

struct OrderingWitness {
    OrderedMultipartite ordering;
    int t = 1;  // blow-up factor whose realisation was tiled
    TilingWitness witness;
};

struct BottleVerdict {
    BottleStatus status = BottleStatus::Unknown;
    std::vector<OrderingWitness> witnesses;
    std::optional<NoCertificate> certificate;
    std::optional<OrderedMultipartite> failing_ordering;
    std::string note;
};

// Every distinct ordering must carry a perfect tiling of the pattern with no
// blow-up. |pattern| must divide |B|.
BottleVerdict check_simple_bottlegraph(const CompleteMultipartite& b, const OrderedGraph& pattern,
                                       long long budget = kDefaultNodeBudget);

// Analytic disqualification first; otherwise the least blow-up factor
// t <= t_max per ordering. Exhausting t_max is Unknown, not No.
BottleVerdict check_bottlegraph_bounded(const CompleteMultipartite& b,
                                        const OrderedGraph& pattern, int t_max = 4,
                                        long long budget = kDefaultNodeBudget);

// --- Tilings of complete multipartite hosts, independent of vertex caps ---

// Copies hold global positions in [1, sum(parts)]. A copy spans the pattern
// iff every pattern edge lands across two different parts.
bool verify_multipartite_tiling(const OrderedMultipartite& host, const OrderedGraph& pattern,
                                const std::vector<std::vector<long long>>& copies,
                                bool require_perfect, std::string* reason = nullptr);

struct MultipartiteTiling {
    OrderedMultipartite host;
    std::vector<std::vector<long long>> copies;
};

// Bottle with floor(h/l+) parts of size l+ * h! and a remainder part, where
// l+ maximises the minimum class size over interval colourings. The tiler
// lays consecutive class-sized intervals scaled by h!; no search involved,
// and the same interval partition works for every ordering.
struct UpperboundConstruction {
    CompleteMultipartite bottle;
    int ell_plus;
    std::vector<int> colouring_lengths;  // colouring achieving l+

    MultipartiteTiling tile(const OrderedMultipartite& ordering) const;
};

UpperboundConstruction upperbound_construction(const OrderedGraph& pattern);

// Complete r-partite frame of total size 2r(r-1)h^2 assembled from a
// flexibility witness, with a constructive perfect tiling. Two perturbation
// regimes: signed offsets summing to zero with |s_k| <= h, or nonnegative
// offsets summing to a multiple of h at blow-up t.
struct FlexibleFrame {
    OrderedMultipartite frame;          // already perturbed / blown up
    OrderedMultipartite base_frame;     // the unperturbed frame at t = 1
    std::vector<std::vector<long long>> copies;
};

FlexibleFrame flexible_frame(const OrderedGraph& pattern, const std::vector<long long>& offsets,
                             int t = 1);

// Text format: a single line "parts: s1 s2 ... sk". The ordered variant
// preserves the sequence; the unordered variant sorts it.
OrderedMultipartite parse_parts_line(const std::string& text);
std::string format_parts_line(const OrderedMultipartite& parts);

}  // namespace ordtile
