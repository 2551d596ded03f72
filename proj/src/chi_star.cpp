#include "ordtile/chi_star.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordtile/multipartite.hpp"

namespace ordtile {

ColouringStats colouring_statistics(const OrderedGraph& g) {
    ColouringStats stats;
    stats.r = interval_chromatic(g);
    for_each_interval_colouring(g, stats.r, /*allow_empty=*/false,
                                [&](const IntervalColouring& col) {
        int first = col.lengths.front();
        int last = col.lengths.back();
        int smallest = *std::min_element(col.lengths.begin(), col.lengths.end());
        stats.ell_minus = std::max(stats.ell_minus, first);
        stats.ell_minus_star = std::max(stats.ell_minus_star, last);
        if (smallest > stats.ell_plus) {
            stats.ell_plus = smallest;
            stats.ell_plus_colouring = col;
        }
        return true;
    });
    int h = g.h();
    stats.alpha_plus = 1;
    while (stats.alpha_plus < h && g.interval_independent(1, stats.alpha_plus + 1))
        ++stats.alpha_plus;
    stats.alpha_minus = 1;
    while (stats.alpha_minus < h && g.interval_independent(h - stats.alpha_minus, h))
        ++stats.alpha_minus;
    stats.alpha = std::min(stats.alpha_plus, stats.alpha_minus);
    return stats;
}

ChiStarBounds chi_star_bounds(const OrderedGraph& g) {
    ColouringStats stats = colouring_statistics(g);
    int h = g.h();
    ChiStarBounds bounds;
    bounds.lower = Rational(h, stats.ell_minus);
    bounds.lower_source = "counting-first-part";
    Rational last(h, stats.ell_minus_star);
    if (last > bounds.lower) {
        bounds.lower = last;
        bounds.lower_source = "counting-last-part";
    }
    if (h >= 2) {
        Rational strong = Rational(stats.r - 1) + Rational(stats.r - 1, h - 1);
        if (strong > bounds.lower) {
            bounds.lower = strong;
            bounds.lower_source = "strong-lower";
        }
    }
    bounds.upper = Rational(h, stats.ell_plus);
    bounds.upper_source = "balanced-construction";
    return bounds;
}

Rational three_partite_formula(int h1, int h2, int h3) {
    int outer_min = std::min(h1, h3);
    int overall_min = std::min(h2, outer_min);
    int h = h1 + h2 + h3;
    return (Rational(2) - Rational(overall_min, outer_min)) * Rational(h, outer_min);
}

std::optional<std::vector<int>> as_complete_multipartite(const OrderedGraph& g) {
    std::vector<int> sizes;
    int run = 1;
    for (int v = 2; v <= g.h(); ++v) {
        if (g.has_edge(v - 1, v)) {
            sizes.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    sizes.push_back(run);
    IntervalColouring parts{sizes};
    for (int k = 1; k <= parts.classes(); ++k) {
        auto [a, b] = parts.bounds(k);
        if (!g.interval_independent(a, b)) return std::nullopt;
    }
    for (int u = 1; u <= g.h(); ++u)
        for (int v = u + 1; v <= g.h(); ++v)
            if (parts.class_of(u) != parts.class_of(v) && !g.has_edge(u, v))
                return std::nullopt;
    return sizes;
}

namespace {

struct ScanCandidate {
    Rational chi_cr;
    std::vector<int> sizes;  // descending
};

// Shapes (m, ..., m, s) with k parts, s <= m, |B| divisible by h and within
// the concrete vertex cap, restricted to chi_cr >= lower.
std::vector<ScanCandidate> scan_candidates(int h, int r, const Rational& lower, int m_max) {
    std::vector<ScanCandidate> out;
    for (int k = std::max(r, 2); k <= std::max(r, h); ++k) {
        for (int m = 1; m <= m_max; ++m) {
            for (int s = 1; s <= m; ++s) {
                long long n = static_cast<long long>(k - 1) * m + s;
                if (n % h != 0 || n > kMaxVertices) continue;
                Rational cc((k - 1) * n, n - s);
                if (cc < lower) continue;
                out.push_back(ScanCandidate{cc, {}});
                auto& sizes = out.back().sizes;
                sizes.assign(k - 1, m);
                sizes.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ScanCandidate& a, const ScanCandidate& b) {
        if (a.chi_cr != b.chi_cr) return a.chi_cr < b.chi_cr;
        return a.sizes < b.sizes;
    });
    return out;
}

}  // namespace

ChiStarResult chi_star_exact(const OrderedGraph& g, const ChiStarSearchOptions& opts) {
    int h = g.h();
    ColouringStats stats = colouring_statistics(g);
    ChiStarBounds bounds = chi_star_bounds(g);
    ChiStarResult result;
    result.lower = bounds.lower;
    result.upper = bounds.upper;
    result.lower_evidence = bounds.lower_source;
    result.upper_evidence = bounds.upper_source;

    auto finish_exact = [&](Rational value, const std::string& rule) {
        if (value < result.lower || value > result.upper)
            throw std::logic_error("exact value " + value.str() + " from rule '" + rule +
                                   "' escapes the certified bounds [" + result.lower.str() +
                                   ", " + result.upper.str() + "]");
        result.exact = true;
        result.value = value;
        result.rule = rule;
        return result;
    };

    if (stats.r == 2) return finish_exact(Rational(h, stats.alpha), "bipartite-alpha");

    std::optional<std::vector<int>> parts = as_complete_multipartite(g);
    if (parts && parts->size() >= 2) {
        const std::vector<int>& p = *parts;
        int smallest = *std::min_element(p.begin(), p.end());
        if (p.front() == smallest)
            return finish_exact(Rational(h, p.front()), "complete-multipartite-first");
        if (p.back() == smallest)
            return finish_exact(Rational(h, p.back()), "complete-multipartite-last");
        if (p.size() == 3)
            return finish_exact(three_partite_formula(p[0], p[1], p[2]), "three-partite");
    }

    if (bounds.lower == bounds.upper) return finish_exact(bounds.lower, "bounds-coincide");

    int m_max = opts.m_max.value_or(h * h);
    for (const ScanCandidate& cand : scan_candidates(h, stats.r, bounds.lower, m_max)) {
        if (cand.chi_cr >= result.upper) break;
        BottleVerdict verdict =
            check_simple_bottlegraph(CompleteMultipartite(cand.sizes), g, opts.budget);
        if (verdict.status != BottleStatus::SimpleYes) continue;
        result.bottlegraph = cand.sizes;
        if (cand.chi_cr == bounds.lower)
            return finish_exact(cand.chi_cr, "bottlegraph-scan");
        result.upper = cand.chi_cr;
        result.upper_evidence = "simple-bottlegraph";
        break;
    }

    result.exact = false;
    result.rule = "interval";
    return result;
}

}  // namespace ordtile
