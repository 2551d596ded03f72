#include "ordtile/partial_tiling.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordtile/chi_star.hpp"
#include "ordtile/colouring.hpp"

namespace ordtile {

TJX tj_x0(const OrderedGraph& pattern) {
    int r = interval_chromatic(pattern);
    if (r < 2) throw std::invalid_argument("needs interval chromatic number >= 2");
    int h = pattern.h();
    std::vector<int> min_at(r, h + 1), max_at(r, 0);
    for_each_interval_colouring(pattern, r, /*allow_empty=*/false,
                                [&](const IntervalColouring& col) {
        for (int k = 0; k < r; ++k) {
            min_at[k] = std::min(min_at[k], col.lengths[k]);
            max_at[k] = std::max(max_at[k], col.lengths[k]);
        }
        return true;
    });
    TJX out;
    out.t_value = *std::max_element(min_at.begin(), min_at.end());
    out.j_value = *std::max_element(max_at.begin(), max_at.end());
    out.x0 = Rational(h, (r - 1) * out.j_value + out.t_value);
    return out;
}

FProfile f_profile(const OrderedGraph& pattern) {
    int h = pattern.h();
    int r = interval_chromatic(pattern);
    FProfile profile;
    profile.chi_lt = r;
    if (r < 2) throw std::invalid_argument("needs interval chromatic number >= 2");

    if (r == 2) {
        ColouringStats stats = colouring_statistics(pattern);
        FPiece piece;
        piece.x_from = Rational(0);
        piece.x_to = Rational(1);
        piece.x_to_inclusive = false;
        piece.a = Rational(0);
        piece.b = Rational(h - stats.alpha, h);
        piece.source = "linear-bipartite";
        profile.pieces.push_back(piece);
        return profile;
    }

    std::optional<std::vector<int>> parts = as_complete_multipartite(pattern);
    if (parts && static_cast<int>(parts->size()) == r &&
        std::is_sorted(parts->begin(), parts->end())) {
        const std::vector<int>& ell = *parts;
        // Breakpoints xi_t = h / (c_t + h) with c_t = t*ell_t - sum(ell_1..t);
        // piece t lives on (xi_{t+1}, xi_t], and the final piece extends to 0
        // because the small-x regime shares its formula.
        std::vector<Rational> xi(r + 1);
        long long prefix = 0;
        for (int t = 1; t <= r; ++t) {
            prefix += ell[t - 1];
            long long c = static_cast<long long>(t) * ell[t - 1] - prefix;
            xi[t] = Rational(h, c + h);
        }
        prefix = 0;
        for (int t = r - 1; t >= 1; --t) {
            Rational from = (t == r - 1) ? Rational(0) : xi[t + 1];
            if (!(from < xi[t])) continue;
            long long sum_t = 0;
            for (int i = 0; i < t; ++i) sum_t += ell[i];
            FPiece piece;
            piece.x_from = from;
            piece.x_to = xi[t];
            piece.x_to_inclusive = true;
            piece.a = Rational(t - 1, t);
            piece.b = Rational(h - sum_t, static_cast<long long>(h) * t);
            piece.source = "piecewise-multipartite";
            profile.pieces.push_back(piece);
        }
        return profile;
    }

    TJX tjx = tj_x0(pattern);
    FPiece piece;
    piece.x_from = Rational(0);
    piece.x_to = tjx.x0 < Rational(1) ? tjx.x0 : Rational(1);
    piece.x_to_inclusive = tjx.x0 < Rational(1);
    piece.a = Rational(r - 2, r - 1);
    piece.b = Rational(tjx.t_value, static_cast<long long>(h) * (r - 1));
    piece.source = "small-x-linear";
    profile.pieces.push_back(piece);
    if (tjx.x0 < Rational(1)) {
        ChiStarResult chi = chi_star_exact(pattern);
        FGap gap;
        gap.x_from = tjx.x0;
        gap.x_to = Rational(1);
        gap.f_lower = piece.value_at(tjx.x0);
        gap.f_upper = Rational(1) - Rational(1) / (chi.exact ? chi.value : chi.upper);
        gap.source = "bounds-only";
        profile.gaps.push_back(gap);
    }
    return profile;
}

XBottleVerdict check_x_bottlegraph(const CompleteMultipartite& b, const Rational& x,
                                   const OrderedGraph& pattern, long long budget) {
    for (int i = 0; i + 1 < b.parts(); ++i)
        if (b.sizes[i] != b.sizes[0])
            throw std::invalid_argument("bottle must have shape (m, ..., m, s)");
    if (x <= Rational(0) || x > Rational(1))
        throw std::invalid_argument("x must lie in (0, 1]");
    XBottleVerdict verdict;
    Rational needed_vertices = x * Rational(b.total());
    verdict.target_copies =
        static_cast<int>((needed_vertices / Rational(pattern.h())).ceil());
    if (verdict.target_copies > b.total() / pattern.h()) {
        // More copies than the vertex count admits; no ordering can comply.
        verdict.status = XBottleStatus::No;
        verdict.failing_ordering = distinct_orderings(b).front();
        return verdict;
    }
    for (const auto& ordering : distinct_orderings(b)) {
        if (verdict.target_copies == 0) {
            verdict.witnesses.push_back(OrderingWitness{ordering, 1, TilingWitness{}});
            continue;
        }
        TilingAnswer answer = max_tiling(to_ordered_graph(ordering), pattern,
                                         verdict.target_copies, budget);
        if (answer.status == TilingStatus::Timeout) {
            verdict.status = XBottleStatus::Unknown;
            return verdict;
        }
        if (!answer.target_met) {
            verdict.status = XBottleStatus::No;
            verdict.failing_ordering = ordering;
            return verdict;
        }
        verdict.witnesses.push_back(OrderingWitness{ordering, 1, *answer.witness});
    }
    verdict.status = XBottleStatus::Yes;
    return verdict;
}

}  // namespace ordtile
