#include "diplo/utility.hpp"

#include <stdexcept>

namespace diplo {

namespace {
constexpr double kBaseSupplyCenter = 10.0;
constexpr double kBaseOther = 1.0;
constexpr double kNeighborDiscount = 0.3;
} // namespace

double UtilityTable::at(const ProvinceId& id) const {
    auto it = values.find(id);
    if (it == values.end()) throw std::runtime_error("no utility entry for province: " + id);
    return it->second;
}

double UtilityTable::raw_at(const ProvinceId& id) const {
    auto it = raw_values.find(id);
    if (it == raw_values.end()) throw std::runtime_error("no utility entry for province: " + id);
    return it->second;
}

UtilityTable normalize_raw(std::map<ProvinceId, double> raw) {
    if (raw.empty()) throw std::runtime_error("cannot normalize an empty utility table");
    double max = 0.0;
    for (const auto& [id, v] : raw)
        if (v > max) max = v;
    if (max <= 0.0) throw std::runtime_error("utility raw values must be positive");
    UtilityTable table;
    table.raw_values = std::move(raw);
    for (const auto& [id, v] : table.raw_values) table.values[id] = v / max;
    return table;
}

UtilityTable compute_utilities(const WorldMap& map) {
    std::map<ProvinceId, double> base;
    for (const Province& p : map.provinces())
        base[p.id] = p.is_supply_center ? kBaseSupplyCenter : kBaseOther;

    // one pass over base values only; neighbour influence never compounds
    std::map<ProvinceId, double> raw;
    for (const Province& p : map.provinces()) {
        double sum = 0.0;
        for (const ProvinceId& q : map.neighbors(p.id)) sum += base.at(q);
        raw[p.id] = base.at(p.id) + kNeighborDiscount * sum;
    }
    return normalize_raw(std::move(raw));
}

} // namespace diplo
