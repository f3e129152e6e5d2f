#pragma once

#include <map>

#include "diplo/adjudicator.hpp"
#include "diplo/deal.hpp"
#include "diplo/state.hpp"
#include "diplo/utility.hpp"

namespace diplo {

// One power's movement orders for the current phase, keyed by unit
// location. Covers every unit of the power.
struct Plan {
    std::map<ProvinceId, Order> orders;

    const Order& for_unit(const Unit& u) const;
    std::vector<Order> as_orders() const;
};

namespace tactician {

// Deterministic utility-greedy planning under binding constraints:
// committed orders are copied verbatim; the remaining units, visited in
// descending utility of their current province, move toward the best
// reachable province that is allowed and strictly better than staying,
// support an earlier own mover heading to the same best province, or hold.
// A unit sitting inside a province its power demilitarized tries to leave
// even without a utility gain.
Plan plan(const WorldMap& map, const GameState& state, const Power& power,
          const Constraints& constraints, const UtilityTable& util);

// What the power would do absent any deals. Equal to plan() with empty
// constraints; every agent anticipates the same orders.
Plan anticipate(const WorldMap& map, const GameState& state, const Power& power,
                const UtilityTable& util);

// Retreat to the legal destination of highest utility, disband when there
// is none.
std::vector<Order> plan_retreats(const WorldMap& map, const GameState& after_movement,
                                 const Resolution& res, const Power& power,
                                 const UtilityTable& util);

// Build on vacant home centers in descending utility while short of the
// center count (fleets where the home center is coastal with more sea than
// land neighbours); disband from the lowest-utility provinces first.
std::vector<Order> plan_adjustments(const WorldMap& map, const GameState& state,
                                    const Power& power, const UtilityTable& util);

} // namespace tactician
} // namespace diplo
