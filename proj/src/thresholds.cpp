#include "ordtile/thresholds.hpp"

#include <stdexcept>

namespace ordtile {

std::string to_string(PerfectCase c) {
    switch (c) {
        case PerfectCase::CaseI: return "CaseI";
        case PerfectCase::CaseII: return "CaseII";
        case PerfectCase::CaseIII: return "CaseIII";
        case PerfectCase::BipartiteOutOfScope: return "BipartiteOutOfScope";
        case PerfectCase::UnresolvedChiStar: return "UnresolvedChiStar";
    }
    return "unknown";
}

namespace {

Rational complement(const Rational& v) { return Rational(1) - Rational(1) / v; }

}  // namespace

ThresholdReport classify(const OrderedGraph& pattern, const ChiStarResult& chi_star) {
    ThresholdReport report;
    report.chi_lt = interval_chromatic(pattern);
    if (report.chi_lt < 2)
        throw std::invalid_argument("thresholds are undefined for edgeless patterns");
    report.chi_star = chi_star;
    BarrierSearchResult barrier = find_local_barrier(pattern);
    report.barrier = barrier.witness;
    report.flexible = is_flexible(pattern).flexible;
    report.fixed_prefix = fixed_prefix_indices(pattern);

    int r = report.chi_lt;
    report.cover_coeff = report.barrier ? complement(Rational(r))
                                        : complement(Rational(r - 1));
    if (chi_star.exact) report.almost_perfect_coeff = complement(chi_star.value);

    if (r == 2) {
        report.perfect_case = PerfectCase::BipartiteOutOfScope;
        return report;
    }

    Rational threshold(r);
    if (chi_star.exact) {
        if (chi_star.value >= threshold) {
            report.perfect_case = PerfectCase::CaseI;
            report.perfect_coeff =
                CoeffRange{complement(chi_star.value), complement(chi_star.value)};
        } else if (report.barrier) {
            report.perfect_case = PerfectCase::CaseII;
            report.perfect_coeff = CoeffRange{complement(threshold), complement(threshold)};
        } else {
            report.perfect_case = PerfectCase::CaseIII;
            report.perfect_coeff =
                CoeffRange{complement(chi_star.value), complement(chi_star.value)};
        }
        return report;
    }

    if (chi_star.lower >= threshold) {
        report.perfect_case = PerfectCase::CaseI;
        report.perfect_coeff = CoeffRange{complement(chi_star.lower),
                                          complement(chi_star.upper)};
    } else if (chi_star.upper < threshold) {
        if (report.barrier) {
            report.perfect_case = PerfectCase::CaseII;
            report.perfect_coeff = CoeffRange{complement(threshold), complement(threshold)};
        } else {
            report.perfect_case = PerfectCase::CaseIII;
            report.perfect_coeff = CoeffRange{complement(chi_star.lower),
                                              complement(chi_star.upper)};
        }
    } else {
        report.perfect_case = PerfectCase::UnresolvedChiStar;
        // Without a barrier the coefficient formula agrees on both sides of
        // the straddle, so an interval is still meaningful.
        if (!report.barrier)
            report.perfect_coeff = CoeffRange{complement(chi_star.lower),
                                              complement(chi_star.upper)};
    }
    return report;
}

}  // namespace ordtile
