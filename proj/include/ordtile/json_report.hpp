#pragma once

#include <json.hpp>

#include "ordtile/extremal.hpp"
#include "ordtile/multipartite.hpp"
#include "ordtile/partial_tiling.hpp"
#include "ordtile/thresholds.hpp"
#include "ordtile/tiling.hpp"

namespace ordtile {

using nlohmann::json;

json rational_json(const Rational& r);  // string "p" or "p/q"

json structure_json(const std::optional<BarrierWitness>& barrier, bool flexible,
                    const std::vector<int>& fixed_prefix);

json chi_star_json(const ChiStarResult& result);

json tiling_json(const TilingAnswer& answer);

json bottle_json(const BottleVerdict& verdict);

json x_bottle_json(const XBottleVerdict& verdict);

json fprofile_json(const FProfile& profile);

json threshold_json(const OrderedGraph& pattern, const ThresholdReport& report);

}  // namespace ordtile
