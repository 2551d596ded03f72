#include "ordtile/json_report.hpp"

namespace ordtile {

json rational_json(const Rational& r) { return r.str(); }

json structure_json(const std::optional<BarrierWitness>& barrier, bool flexible,
                    const std::vector<int>& fixed_prefix) {
    json out;
    if (barrier)
        out["local_barrier"] = {{"i", barrier->i}, {"j", barrier->j},
                                {"vacuous", barrier->vacuous}};
    else
        out["local_barrier"] = nullptr;
    out["flexible"] = flexible;
    out["fixed_prefix"] = fixed_prefix;
    return out;
}

json chi_star_json(const ChiStarResult& result) {
    json inner;
    if (result.exact) {
        inner["kind"] = "exact";
        inner["value"] = rational_json(result.value);
        inner["rule"] = result.rule;
    } else {
        inner["kind"] = "interval";
        inner["lower"] = rational_json(result.lower);
        inner["upper"] = rational_json(result.upper);
        inner["lower_evidence"] = result.lower_evidence;
        inner["upper_evidence"] = result.upper_evidence;
    }
    if (result.bottlegraph) inner["bottlegraph"] = *result.bottlegraph;
    return json{{"chi_star", inner}};
}

json tiling_json(const TilingAnswer& answer) {
    json out;
    out["status"] = to_string(answer.status);
    json copies = json::array();
    if (answer.witness)
        for (const auto& copy : answer.witness->copies) copies.push_back(copy);
    out["copies"] = copies;
    out["nodes"] = answer.nodes;
    return out;
}

json bottle_json(const BottleVerdict& verdict) {
    json out;
    out["status"] = to_string(verdict.status);
    json orderings = json::array();
    for (const auto& w : verdict.witnesses) {
        json entry;
        entry["parts"] = w.ordering.sizes_in_order;
        entry["t"] = w.t;
        json copies = json::array();
        for (const auto& copy : w.witness.copies) copies.push_back(copy);
        entry["copies"] = copies;
        orderings.push_back(entry);
    }
    out["orderings"] = orderings;
    if (verdict.certificate)
        out["certificate"] = {{"name", to_string(verdict.certificate->kind)},
                              {"lhs", rational_json(verdict.certificate->lhs)},
                              {"rhs", rational_json(verdict.certificate->rhs)}};
    else
        out["certificate"] = nullptr;
    if (verdict.failing_ordering)
        out["failing_ordering"] = verdict.failing_ordering->sizes_in_order;
    else
        out["failing_ordering"] = nullptr;
    if (!verdict.note.empty()) out["note"] = verdict.note;
    return out;
}

json x_bottle_json(const XBottleVerdict& verdict) {
    json out;
    switch (verdict.status) {
        case XBottleStatus::Yes: out["status"] = "yes"; break;
        case XBottleStatus::No: out["status"] = "no"; break;
        case XBottleStatus::Unknown: out["status"] = "unknown"; break;
    }
    out["target_copies"] = verdict.target_copies;
    out["certificate"] = nullptr;
    json orderings = json::array();
    for (const auto& w : verdict.witnesses) {
        json entry;
        entry["parts"] = w.ordering.sizes_in_order;
        json copies = json::array();
        for (const auto& copy : w.witness.copies) copies.push_back(copy);
        entry["copies"] = copies;
        orderings.push_back(entry);
    }
    out["orderings"] = orderings;
    if (verdict.failing_ordering)
        out["failing_ordering"] = verdict.failing_ordering->sizes_in_order;
    else
        out["failing_ordering"] = nullptr;
    return out;
}

json fprofile_json(const FProfile& profile) {
    json entries = json::array();
    for (const FPiece& piece : profile.pieces) {
        json entry;
        entry["x_from"] = rational_json(piece.x_from);
        entry["x_to"] = rational_json(piece.x_to);
        entry["x_to_inclusive"] = piece.x_to_inclusive;
        entry["f"] = piece.a.str() + " + " + piece.b.str() + "*x";
        entry["source"] = piece.source;
        entries.push_back(entry);
    }
    for (const FGap& gap : profile.gaps) {
        json entry;
        entry["x_from"] = rational_json(gap.x_from);
        entry["x_to"] = rational_json(gap.x_to);
        entry["bounds_only"] = true;
        entry["f_lower"] = rational_json(gap.f_lower);
        entry["f_upper"] = rational_json(gap.f_upper);
        entry["source"] = gap.source;
        entries.push_back(entry);
    }
    return entries;
}

json threshold_json(const OrderedGraph& pattern, const ThresholdReport& report) {
    json out;
    out["h"] = pattern.h();
    out["chi_lt"] = report.chi_lt;
    out["structure"] = structure_json(report.barrier, report.flexible, report.fixed_prefix);
    out["chi_star"] = chi_star_json(report.chi_star)["chi_star"];
    out["perfect_case"] = to_string(report.perfect_case);
    if (report.perfect_coeff) {
        if (report.perfect_coeff->exact())
            out["perfect_coeff"] = rational_json(report.perfect_coeff->lower);
        else
            out["perfect_coeff"] = {{"lower", rational_json(report.perfect_coeff->lower)},
                                    {"upper", rational_json(report.perfect_coeff->upper)}};
    } else {
        out["perfect_coeff"] = nullptr;
    }
    out["cover_coeff"] = rational_json(report.cover_coeff);
    if (report.almost_perfect_coeff)
        out["almost_perfect_coeff"] = rational_json(*report.almost_perfect_coeff);
    else
        out["almost_perfect_coeff"] = nullptr;
    return out;
}

}  // namespace ordtile
