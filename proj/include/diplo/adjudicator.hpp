#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diplo/map.hpp"
#include "diplo/state.hpp"
#include "diplo/types.hpp"

namespace diplo {

enum class OrderStatus { Succeeded, Bounced, Cut, Invalid };

const char* order_status_token(OrderStatus s);

struct OrderOutcome {
    Order order;
    OrderStatus status = OrderStatus::Succeeded;
};

struct Dislodgement {
    Unit unit;
    ProvinceId attacker_origin;
};

struct Capture {
    Power power;
    ProvinceId sc;
    std::optional<Power> prior_owner;
};

// Outcome of one movement-phase adjudication. `captures` stays empty until
// ownership is updated after the Fall retreat phase.
struct Resolution {
    std::vector<OrderOutcome> outcomes;      // sorted by acting unit location
    std::vector<Dislodgement> dislodged;     // sorted by unit location
    std::vector<Capture> captures;
    std::set<ProvinceId> bounced_provinces;  // contested, nobody got in

    const OrderOutcome* outcome_for(const ProvinceId& unit_location) const;
    bool is_dislodged(const ProvinceId& unit_location) const;
};

// Every order the unit may legally submit this movement phase: Hold, all
// moves, and all supports of currently existing units whose action target
// is adjacent to the supporter. Sorted by order kind, then province ids.
std::vector<Order> legal_orders(const WorldMap& map, const GameState& state, const Unit& unit);

// Simultaneous movement resolution. Missing orders default to Hold; orders
// breaking the order invariants are marked Invalid and treated as Hold.
// Rules: a move's strength is 1 + uncut matching supports; it succeeds iff
// it strictly beats every competing move into the province and strictly
// beats the hold strength of an occupant that does not vacate; equal
// strengths bounce everyone; a support is cut by any move into the
// supporter's province from anywhere but the province the support targets;
// head-to-head swaps bounce unless one side is strictly stronger; supports
// never count toward dislodging a unit of the supporting power.
// Throws if an order references a unit that is not on the board.
Resolution adjudicate(const WorldMap& map, const GameState& state,
                      const std::vector<Order>& orders);

// Board after the movement phase: successful movers relocated, dislodged
// units removed (they re-enter through resolve_retreats). Phase unchanged.
GameState apply_movement(const GameState& state, const Resolution& res);

// Adjacent, vacant, not the attacker's origin, not a province where the
// movement phase bounced. Sorted.
std::vector<ProvinceId> legal_retreat_destinations(const WorldMap& map,
                                                   const GameState& after_movement,
                                                   const Resolution& res, const Unit& dislodged);

// Applies retreat/disband orders for dislodged units. An illegal or missing
// retreat disbands the unit; two retreats to one province disband both.
GameState resolve_retreats(const WorldMap& map, const GameState& after_movement,
                           const Resolution& res, const std::vector<Order>& retreats);

// After the Fall retreat phase: every supply center occupied by a unit
// changes owner to that unit's power. Returns the captures.
std::vector<Capture> update_sc_ownership(const WorldMap& map, GameState& state);

struct WinterResult {
    GameState state;
    std::vector<std::string> warnings;  // ignored builds/disbands, forced disbands
};

// Builds on vacant owned home centers while units < centers; disbands as
// ordered; any remaining surplus is force-disbanded (alphabetical by
// province). Powers with no units and no centers drop out of `alive`.
WinterResult resolve_winter(const WorldMap& map, const GameState& state,
                            const std::map<Power, std::vector<Order>>& adjustments);

struct GameStatus {
    enum Kind { Ongoing, Solo, YearLimitReached } kind = Ongoing;
    Power solo_power;  // set iff kind == Solo
};

inline constexpr int kSoloThreshold = 18;

// Solo once a power owns kSoloThreshold centers; the year limit is reached
// at the end of Winter of max_year.
GameStatus game_status(const GameState& state, int max_year);

} // namespace diplo
