#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "diplo/map.hpp"
#include "diplo/types.hpp"

namespace diplo {

// Snapshot of the board between adjudications. At most one unit per
// province; a power is alive iff it keeps at least one unit or one
// supply center.
struct GameState {
    int year = 1901;
    Phase phase = Phase::Spring;
    std::vector<Unit> units;                      // kept sorted by location
    std::map<ProvinceId, Power> sc_owner;         // absent key = unowned
    std::set<Power> alive;

    const Unit* unit_at(const ProvinceId& p) const;
    std::vector<Unit> units_of(const Power& power) const;
    int sc_count(const Power& power) const;
    bool occupied(const ProvinceId& p) const { return unit_at(p) != nullptr; }

    void insert_unit(const Unit& u);              // throws if province occupied
    void remove_unit(const ProvinceId& location); // throws if empty
    void normalize();                             // sort units, recompute alive
};

// Year 1901 Spring: initial placement from the map file, home supply
// centers owned by their home powers, neutral centers unowned.
GameState initial_state(const WorldMap& map);

// SPR -> SUM -> FAL -> AUT -> WIN -> next year's SPR.
void advance_phase(GameState& state);

} // namespace diplo
