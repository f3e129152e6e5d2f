#include "diplo/adjudicator.hpp"

#include <algorithm>

namespace diplo {

const char* order_status_token(OrderStatus s) {
    switch (s) {
        case OrderStatus::Succeeded: return "SUCCEEDED";
        case OrderStatus::Bounced: return "BOUNCED";
        case OrderStatus::Cut: return "CUT";
        case OrderStatus::Invalid: return "INVALID";
    }
    throw std::logic_error("bad order status");
}

const OrderOutcome* Resolution::outcome_for(const ProvinceId& unit_location) const {
    for (const OrderOutcome& o : outcomes)
        if (o.order.unit.location == unit_location) return &o;
    return nullptr;
}

bool Resolution::is_dislodged(const ProvinceId& unit_location) const {
    for (const Dislodgement& d : dislodged)
        if (d.unit.location == unit_location) return true;
    return false;
}

std::vector<Order> legal_orders(const WorldMap& map, const GameState& state, const Unit& unit) {
    bool present = false;
    for (const Unit& u : state.units)
        if (u == unit) { present = true; break; }
    if (!present)
        throw std::runtime_error("legal_orders: unit not in state at " + unit.location);

    std::vector<Order> holds{Order::hold(unit)};
    std::vector<Order> moves;
    std::vector<Order> support_moves;
    std::vector<Order> support_holds;

    const std::set<ProvinceId> mine = map.reachable(unit.location, unit.kind);
    for (const ProvinceId& d : mine) moves.push_back(Order::move(unit, d));

    for (const Unit& other : state.units) {
        if (other == unit) continue;
        if (mine.count(other.location)) support_holds.push_back(Order::support_hold(unit, other));
        for (const ProvinceId& d : map.reachable(other.location, other.kind))
            if (mine.count(d)) support_moves.push_back(Order::support_move(unit, other, d));
    }

    std::sort(support_moves.begin(), support_moves.end(), [](const Order& a, const Order& b) {
        if (a.supported.location != b.supported.location)
            return a.supported.location < b.supported.location;
        return a.dest < b.dest;
    });
    std::sort(support_holds.begin(), support_holds.end(), [](const Order& a, const Order& b) {
        return a.supported.location < b.supported.location;
    });

    std::vector<Order> out;
    out.reserve(holds.size() + moves.size() + support_moves.size() + support_holds.size());
    for (auto* v : {&holds, &moves, &support_moves, &support_holds})
        out.insert(out.end(), v->begin(), v->end());
    return out;
}

namespace {

// Working record for one ordered unit during adjudication.
struct Entry {
    Order order;
    OrderStatus status = OrderStatus::Succeeded;
    bool valid_move = false;    // a well-formed Move
    bool void_support = false;  // support not matching the supported unit's order
    bool cut = false;
    int move_strength = 1;
    std::vector<Power> move_supporters;  // powers of counted supports
    int hold_strength = 1;

    enum MoveState { Undecided, Success, Fail } move_state = Undecided;
};

const ProvinceId& support_target(const Order& o) {
    return o.kind == OrderKind::SupportMove ? o.dest : o.supported.location;
}

} // namespace

Resolution adjudicate(const WorldMap& map, const GameState& state,
                      const std::vector<Order>& orders) {
    std::map<ProvinceId, const Unit*> board;
    for (const Unit& u : state.units) board[u.location] = &u;

    // one entry per unit, orders matched by identity, missing = Hold
    std::map<ProvinceId, Entry> entries;
    for (const Order& o : orders) {
        if (!o.is_movement_order())
            throw std::runtime_error("adjudicate: not a movement order: " + order_notation(o));
        auto it = board.find(o.unit.location);
        if (it == board.end() || *it->second != o.unit)
            throw std::runtime_error("adjudicate: order for a unit not on the board: " +
                                     order_notation_with_power(o));
        if (entries.count(o.unit.location))
            throw std::runtime_error("adjudicate: two orders for the unit at " + o.unit.location);
        entries[o.unit.location] = Entry{o};
    }
    for (const Unit& u : state.units)
        if (!entries.count(u.location)) entries[u.location] = Entry{Order::hold(u)};

    // validity; invalid orders degrade to Hold
    for (auto& [loc, e] : entries) {
        const Order& o = e.order;
        switch (o.kind) {
            case OrderKind::Hold:
                break;
            case OrderKind::Move:
                if (map.reachable(loc, o.unit.kind).count(o.dest)) e.valid_move = true;
                else e.status = OrderStatus::Invalid;
                break;
            case OrderKind::SupportMove:
            case OrderKind::SupportHold: {
                auto sup = board.find(o.supported.location);
                bool ok = sup != board.end() && o.supported.location != loc &&
                          sup->second->kind == o.supported.kind &&
                          (o.supported.power.empty() || sup->second->power == o.supported.power);
                if (ok) {
                    const ProvinceId& target = support_target(o);
                    ok = map.reachable(loc, o.unit.kind).count(target) > 0;
                }
                if (!ok) e.status = OrderStatus::Invalid;
                break;
            }
            default:
                throw std::logic_error("unreachable");
        }
    }

    // void supports: the supported unit is not doing the supported action
    for (auto& [loc, e] : entries) {
        if (e.status == OrderStatus::Invalid || !e.order.is_support()) continue;
        const Entry& sup = entries.at(e.order.supported.location);
        if (e.order.kind == OrderKind::SupportMove) {
            if (!sup.valid_move || sup.status == OrderStatus::Invalid ||
                sup.order.dest != e.order.dest)
                e.void_support = true;
        } else {
            if (sup.valid_move && sup.status != OrderStatus::Invalid) e.void_support = true;
        }
        if (e.void_support) e.status = OrderStatus::Invalid;
    }

    // support cuts: any valid move into the supporter's province, except from
    // the province the support is directed at
    for (auto& [loc, e] : entries) {
        if (!e.order.is_support() || e.status == OrderStatus::Invalid) continue;
        for (const auto& [from, other] : entries) {
            if (!other.valid_move || other.order.dest != loc) continue;
            if (from == support_target(e.order)) continue;
            e.cut = true;
            e.status = OrderStatus::Cut;
            break;
        }
    }

    // strengths
    for (auto& [loc, e] : entries) {
        if (!e.order.is_support() || e.status != OrderStatus::Succeeded) continue;
        Entry& sup = entries.at(e.order.supported.location);
        if (e.order.kind == OrderKind::SupportMove) {
            sup.move_strength += 1;
            sup.move_supporters.push_back(e.order.unit.power);
        } else {
            sup.hold_strength += 1;
        }
    }

    auto effective_strength = [&](const Entry& e, const Power& defender) {
        int s = 1;
        for (const Power& p : e.move_supporters)
            if (p != defender) ++s;
        return s;
    };
    auto beats_contest = [&](const ProvinceId& loc, const Entry& e) {
        for (const auto& [other_loc, other] : entries) {
            if (other_loc == loc || !other.valid_move) continue;
            if (other.order.dest == e.order.dest && other.move_strength >= e.move_strength)
                return false;
        }
        return true;
    };

    // movement fixpoint; whatever stays undecided is a ring of moves that
    // all advance
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [loc, e] : entries) {
            if (!e.valid_move || e.move_state != Entry::Undecided) continue;
            if (!beats_contest(loc, e)) {
                e.move_state = Entry::Fail;
                changed = true;
                continue;
            }
            auto occ_it = entries.find(e.order.dest);
            if (occ_it == entries.end()) {
                e.move_state = Entry::Success;
                changed = true;
                continue;
            }
            Entry& occ = occ_it->second;
            const Power& occ_power = occ.order.unit.power;
            if (occ.valid_move) {
                if (occ.order.dest == loc) {  // head-to-head
                    e.move_state = effective_strength(e, occ_power) > occ.move_strength
                                       ? Entry::Success
                                       : Entry::Fail;
                    changed = true;
                } else if (occ.move_state == Entry::Success) {
                    e.move_state = Entry::Success;
                    changed = true;
                } else if (occ.move_state == Entry::Fail) {
                    e.move_state = effective_strength(e, occ_power) > 1 ? Entry::Success
                                                                        : Entry::Fail;
                    changed = true;
                }
            } else {
                e.move_state = effective_strength(e, occ_power) > occ.hold_strength
                                   ? Entry::Success
                                   : Entry::Fail;
                changed = true;
            }
        }
    }
    for (auto& [loc, e] : entries)
        if (e.valid_move && e.move_state == Entry::Undecided) e.move_state = Entry::Success;

    Resolution res;
    for (auto& [loc, e] : entries) {
        if (e.valid_move) {
            e.status = e.move_state == Entry::Success ? OrderStatus::Succeeded
                                                      : OrderStatus::Bounced;
        }
        res.outcomes.push_back(OrderOutcome{e.order, e.status});
    }

    // dislodgements: a successful move onto a unit that did not vacate
    for (const auto& [loc, e] : entries) {
        if (!e.valid_move || e.move_state != Entry::Success) continue;
        auto occ_it = entries.find(e.order.dest);
        if (occ_it == entries.end()) continue;
        const Entry& occ = occ_it->second;
        bool vacated = occ.valid_move && occ.move_state == Entry::Success &&
                       occ.order.dest != loc;
        if (!vacated)
            res.dislodged.push_back(Dislodgement{occ.order.unit, loc});
    }
    std::sort(res.dislodged.begin(), res.dislodged.end(),
              [](const Dislodgement& a, const Dislodgement& b) {
                  return a.unit.location < b.unit.location;
              });

    // provinces where moves were attempted and everyone bounced
    std::map<ProvinceId, std::pair<bool, bool>> contest;  // dest -> (attempted, entered)
    for (const auto& [loc, e] : entries) {
        if (!e.valid_move) continue;
        auto& c = contest[e.order.dest];
        c.first = true;
        if (e.move_state == Entry::Success) c.second = true;
    }
    for (const auto& [dest, c] : contest)
        if (c.first && !c.second) res.bounced_provinces.insert(dest);

    return res;
}

GameState apply_movement(const GameState& state, const Resolution& res) {
    GameState next = state;
    next.units.clear();
    for (const Unit& u : state.units) {
        if (res.is_dislodged(u.location)) continue;
        const OrderOutcome* o = res.outcome_for(u.location);
        Unit moved = u;
        if (o && o->order.kind == OrderKind::Move && o->status == OrderStatus::Succeeded)
            moved.location = o->order.dest;
        next.units.push_back(moved);
    }
    std::sort(next.units.begin(), next.units.end());
    return next;
}

std::vector<ProvinceId> legal_retreat_destinations(const WorldMap& map,
                                                   const GameState& after_movement,
                                                   const Resolution& res,
                                                   const Unit& dislodged) {
    ProvinceId attacker_origin;
    bool found = false;
    for (const Dislodgement& d : res.dislodged)
        if (d.unit == dislodged) {
            attacker_origin = d.attacker_origin;
            found = true;
        }
    if (!found)
        throw std::runtime_error("legal_retreat_destinations: unit was not dislodged: " +
                                 dislodged.location);
    std::vector<ProvinceId> out;
    for (const ProvinceId& d : map.reachable(dislodged.location, dislodged.kind)) {
        if (d == attacker_origin) continue;
        if (after_movement.occupied(d)) continue;
        if (res.bounced_provinces.count(d)) continue;
        out.push_back(d);
    }
    return out;
}

GameState resolve_retreats(const WorldMap& map, const GameState& after_movement,
                           const Resolution& res, const std::vector<Order>& retreats) {
    std::map<ProvinceId, const Order*> by_unit;
    for (const Order& o : retreats) {
        if (o.kind != OrderKind::Retreat && o.kind != OrderKind::Disband)
            throw std::runtime_error("resolve_retreats: not a retreat order: " +
                                     order_notation(o));
        by_unit[o.unit.location] = &o;
    }

    // first pass: keep only legal retreats, everything else disbands
    std::vector<std::pair<Unit, ProvinceId>> moving;
    for (const Dislodgement& d : res.dislodged) {
        auto it = by_unit.find(d.unit.location);
        if (it == by_unit.end() || it->second->kind == OrderKind::Disband) continue;
        if (it->second->unit != d.unit) continue;
        const ProvinceId& dest = it->second->dest;
        auto legal = legal_retreat_destinations(map, after_movement, res, d.unit);
        if (std::find(legal.begin(), legal.end(), dest) == legal.end()) continue;
        moving.emplace_back(d.unit, dest);
    }

    // second pass: retreat collisions disband both
    GameState next = after_movement;
    for (const auto& [unit, dest] : moving) {
        int same = 0;
        for (const auto& [u2, d2] : moving)
            if (d2 == dest) ++same;
        if (same > 1) continue;
        Unit placed = unit;
        placed.location = dest;
        next.insert_unit(placed);
    }
    next.normalize();
    return next;
}

std::vector<Capture> update_sc_ownership(const WorldMap& map, GameState& state) {
    std::vector<Capture> captures;
    for (const Province& p : map.provinces()) {
        if (!p.is_supply_center) continue;
        const Unit* u = state.unit_at(p.id);
        if (!u) continue;
        auto it = state.sc_owner.find(p.id);
        std::optional<Power> prior;
        if (it != state.sc_owner.end()) prior = it->second;
        if (!prior || *prior != u->power) {
            captures.push_back(Capture{u->power, p.id, prior});
            state.sc_owner[p.id] = u->power;
        }
    }
    state.normalize();
    return captures;
}

WinterResult resolve_winter(const WorldMap& map, const GameState& state,
                            const std::map<Power, std::vector<Order>>& adjustments) {
    WinterResult result{state, {}};
    GameState& s = result.state;

    for (const auto& [power, orders] : adjustments) {
        for (const Order& o : orders) {
            if (o.kind == OrderKind::Disband) {
                const Unit* u = s.unit_at(o.unit.location);
                if (!u || u->power != power) {
                    result.warnings.push_back("ignored disband at " + o.unit.location +
                                              " for " + power);
                    continue;
                }
                s.remove_unit(o.unit.location);
            } else if (o.kind == OrderKind::Build) {
                std::string why;
                const Province* prov =
                    map.has_province(o.unit.location) ? &map.province(o.unit.location) : nullptr;
                if (o.unit.power != power) why = "wrong power";
                else if (!prov) why = "unknown province";
                else if (!prov->home_power || *prov->home_power != power) why = "not a home supply center";
                else if (!s.sc_owner.count(prov->id) || s.sc_owner.at(prov->id) != power) why = "center not owned";
                else if (s.occupied(prov->id)) why = "province occupied";
                else if (!terrain_admits(prov->kind, o.unit.kind)) why = "terrain does not admit unit kind";
                else if ((int)s.units_of(power).size() >= s.sc_count(power)) why = "at supply-center limit";
                if (!why.empty()) {
                    result.warnings.push_back("ignored build at " + o.unit.location + " for " +
                                              power + ": " + why);
                    continue;
                }
                s.insert_unit(Unit{power, o.unit.kind, o.unit.location});
            } else {
                throw std::runtime_error("resolve_winter: not an adjustment order: " +
                                         order_notation(o));
            }
        }
    }

    // surplus not covered by explicit disbands comes off alphabetically
    std::set<Power> powers;
    for (const Unit& u : s.units) powers.insert(u.power);
    for (const Power& power : powers) {
        while ((int)s.units_of(power).size() > s.sc_count(power)) {
            Unit victim = s.units_of(power).front();
            result.warnings.push_back("forced disband at " + victim.location + " for " + power);
            s.remove_unit(victim.location);
        }
    }

    s.normalize();
    return result;
}

GameStatus game_status(const GameState& state, int max_year) {
    for (const Power& p : state.alive)
        if (state.sc_count(p) >= kSoloThreshold) return GameStatus{GameStatus::Solo, p};
    if (state.year >= max_year && state.phase == Phase::Winter)
        return GameStatus{GameStatus::YearLimitReached, {}};
    return GameStatus{GameStatus::Ongoing, {}};
}

} // namespace diplo
