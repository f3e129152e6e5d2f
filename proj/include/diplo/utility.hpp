#pragma once

#include <map>

#include "diplo/map.hpp"

namespace diplo {

// Static per-province worth, fixed for the whole game. Raw score is
// base + 0.3 * (sum of neighbour bases) where base is 10 for supply
// centers and 1 otherwise, computed in one simultaneous pass; the table
// then divides by the maximum so the best province is exactly 1.
struct UtilityTable {
    std::map<ProvinceId, double> raw_values;
    std::map<ProvinceId, double> values;  // normalized to (0, 1]

    double at(const ProvinceId& id) const;      // normalized; throws on unknown id
    double raw_at(const ProvinceId& id) const;  // pre-normalization
};

UtilityTable compute_utilities(const WorldMap& map);

// Normalization step on its own, for tables built from externally chosen
// raw scores.
UtilityTable normalize_raw(std::map<ProvinceId, double> raw);

} // namespace diplo
